//! Torsion algebra of the Lee form.
//!
//! A locally conformal structure is controlled by a closed one-form θ, the
//! Lee form. At a point, the characteristic torsion three-form is a fixed
//! multiple of `∗(θ ∧ Φ)` and lies in the 8-dimensional part of the
//! three-forms; combining a caller-supplied coexterior derivative of the
//! structure form with the Lee form recovers the general torsion expression.
//! Everything here is a pointwise combiner — no derivative is ever computed.
//!
//! The family of twisted Dirac operators differs from the Levi-Civita one by
//! the zeroth-order term `−(7t/24)(θ·)`. The deformation-space statement
//! rests on an exact cancellation: subtracting the matching eigen-shift
//! `−3·I − (7t/24)(θ·)` removes every t-dependent term, leaving `3·I`
//! regardless of θ and t. [`cancellation_check`] builds both operands through
//! separate arithmetic routes and verifies the cancellation entrywise.

use crate::cayley::{cayley_form, lambda3_projectors, project3, ThreeFormPart};
use crate::clifford::{clifford_action, clifford_apply, GammaRep, SpinorEndo};
use crate::form::{FormError, KForm};
use crate::rational::{int, rat, Rational};
use crate::spinor::{spinor_ratio, SingletData};

/// A Lee form: a plain one-form, wrapped so call sites cannot confuse it
/// with other grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeeForm(KForm);

impl LeeForm {
    pub fn new(theta: KForm) -> Result<LeeForm, FormError> {
        if theta.grade() != 1 {
            return Err(FormError::GradeMismatch {
                expected: 1,
                found: theta.grade(),
            });
        }
        Ok(LeeForm(theta))
    }

    pub fn zero() -> LeeForm {
        LeeForm(KForm::zero(1).expect("grade 1 is valid"))
    }

    pub fn form(&self) -> &KForm {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Which formula produced a torsion form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionSource {
    /// `T = −(7/6) ∗(θ ∧ Φ)`, valid when the coexterior derivative of the
    /// structure form vanishes against the 48-part.
    LeeFormula,
    /// `T = −δΦ − (7/6) ∗(θ ∧ Φ)` with a caller-supplied δΦ.
    GeneralCombiner,
}

/// A torsion three-form together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionData {
    pub torsion: KForm,
    pub source: TorsionSource,
    pub lee: LeeForm,
}

/// Pointwise torsion of the characteristic connection from the Lee form
/// alone: `T = −(7/6) ∗(θ ∧ Φ)`. The result lies in the 8-dimensional part
/// of the three-forms.
pub fn torsion_from_lee(theta: &LeeForm) -> TorsionData {
    let star = theta
        .form()
        .wedge(&cayley_form())
        .expect("1 + 4 ≤ 8")
        .hodge_star();
    TorsionData {
        torsion: star.scale(&rat(-7, 6)),
        source: TorsionSource::LeeFormula,
        lee: theta.clone(),
    }
}

/// General pointwise torsion combiner: `T = −δΦ − (7/6) ∗(θ ∧ Φ)` for a
/// caller-supplied grade-3 coexterior derivative.
pub fn ivanov_torsion(delta_phi: &KForm, theta: &LeeForm) -> Result<TorsionData, FormError> {
    if delta_phi.grade() != 3 {
        return Err(FormError::GradeMismatch {
            expected: 3,
            found: delta_phi.grade(),
        });
    }
    let lee_part = torsion_from_lee(theta);
    Ok(TorsionData {
        torsion: lee_part.torsion.sub(delta_phi),
        source: TorsionSource::GeneralCombiner,
        lee: theta.clone(),
    })
}

/// Recovers the Lee form from a grade-3 coexterior derivative of the
/// structure form: `θ = (1/7) ∗(δΦ ∧ Φ)`.
pub fn lee_from_delta_phi(delta_phi: &KForm) -> Result<LeeForm, FormError> {
    if delta_phi.grade() != 3 {
        return Err(FormError::GradeMismatch {
            expected: 3,
            found: delta_phi.grade(),
        });
    }
    let theta = delta_phi
        .wedge(&cayley_form())?
        .hodge_star()
        .scale(&rat(1, 7));
    LeeForm::new(theta)
}

/// What the Clifford-action comparison of torsion against the Lee form
/// measures on the singlet spinor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionCliffordReport {
    /// Both sides vanish because θ = 0.
    pub theta_is_zero: bool,
    /// `(T·)ε` is an exact rational multiple of `(θ·)ε`.
    pub proportional: bool,
    /// The multiple `r` with `(T·)ε = r · (θ·)ε`.
    pub ratio: Option<Rational>,
    /// Whether `r` equals the classical constant −7/6.
    pub conforms_to_classical_constant: bool,
    /// The measured constant `c` with `(∗(θ∧Φ)·)ε = c · (θ·)ε`.
    pub star_action_constant: Option<Rational>,
}

/// Compares `(T·)ε` against `(θ·)ε` for `T = torsion_from_lee(θ)`.
///
/// Proportionality with a θ-independent ratio is the hard content; whether
/// the ratio equals −7/6 depends on normalization conventions and is
/// reported, not asserted.
pub fn torsion_clifford_check(
    theta: &LeeForm,
    singlet: &SingletData,
    rep: &GammaRep,
) -> TorsionCliffordReport {
    if theta.is_zero() {
        return TorsionCliffordReport {
            theta_is_zero: true,
            proportional: true,
            ratio: None,
            conforms_to_classical_constant: false,
            star_action_constant: None,
        };
    }
    let torsion = torsion_from_lee(theta);
    let s = clifford_apply(&torsion.torsion, rep, &singlet.epsilon);
    let u = clifford_apply(theta.form(), rep, &singlet.epsilon);
    let star = theta
        .form()
        .wedge(&cayley_form())
        .expect("1 + 4 ≤ 8")
        .hodge_star();
    let star_image = clifford_apply(&star, rep, &singlet.epsilon);
    let ratio = spinor_ratio(&s, &u);
    let star_action_constant = spinor_ratio(&star_image, &u);
    TorsionCliffordReport {
        theta_is_zero: false,
        proportional: ratio.is_some(),
        conforms_to_classical_constant: ratio.as_ref() == Some(&rat(-7, 6)),
        ratio,
        star_action_constant,
    }
}

/// The zeroth-order endomorphism data of the twisted Dirac family at
/// parameter `t`: the torsion term of the operator and the eigen-shift it is
/// compared against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracZeroOrderSymbol {
    pub t: Rational,
    /// `−(7t/24)(θ·)`, assembled as `t` times a quarter of the torsion
    /// action constant applied to `(θ·)`.
    pub torsion_part: SpinorEndo,
    /// `−3·I − (7t/24)(θ·)`, assembled directly from the coefficient −7/24.
    pub eigen_shift: SpinorEndo,
}

impl DiracZeroOrderSymbol {
    /// `eigen_shift − torsion_part`, which is `−3·I` for every `t` and θ.
    pub fn shift_difference(&self) -> SpinorEndo {
        self.eigen_shift.sub(&self.torsion_part)
    }
}

/// Builds the zeroth-order symbol pair at parameter `t`.
///
/// The two members carry the same t-dependent term on purpose, but compute
/// its coefficient through different routes: the operator side as
/// `t · (1/4) · (−7/6)`, the eigen-shift side as the literal `−7t/24`.
pub fn torsion_operator(theta: &LeeForm, t: &Rational, rep: &GammaRep) -> DiracZeroOrderSymbol {
    let theta_action = clifford_action(theta.form(), rep);
    // operator route: a quarter of the torsion–Lee constant, scaled by t
    let torsion_coefficient = rat(1, 4) * rat(-7, 6) * t;
    let torsion_part = theta_action.scale(&torsion_coefficient);
    // eigen-shift route: the literal −7t/24 next to −3·I
    let eigen_shift = SpinorEndo::identity()
        .scale(&int(-3))
        .add(&theta_action.scale(&(rat(-7, 24) * t)));
    DiracZeroOrderSymbol {
        t: t.clone(),
        torsion_part,
        eigen_shift,
    }
}

/// Verifies the exact cancellation of the t-dependent terms for every `t` in
/// the sample: both `torsion_part − (eigen_shift + 3·I)` and
/// `(torsion_part − eigen_shift) − 3·I` must be the zero endomorphism, so the
/// kernel characterization is independent of `t` and θ.
pub fn cancellation_check(theta: &LeeForm, ts: &[Rational], rep: &GammaRep) -> bool {
    let three_id = SpinorEndo::identity().scale(&int(3));
    ts.iter().all(|t| {
        let symbol = torsion_operator(theta, t, rep);
        let residual_shift = symbol
            .torsion_part
            .sub(&symbol.eigen_shift.add(&three_id));
        let residual_symbol = symbol
            .torsion_part
            .sub(&symbol.eigen_shift)
            .sub(&three_id);
        residual_shift.is_zero() && residual_symbol.is_zero()
    })
}

/// The 48-part of a torsion form; exactly zero for torsion produced by the
/// Lee formula.
pub fn torsion_48_part(data: &TorsionData) -> KForm {
    let projectors = lambda3_projectors();
    project3(&data.torsion, ThreeFormPart::FortyEight, &projectors)
        .expect("torsion is grade 3")
}
