//! The invariant spinor and everything it certifies: the exact spectrum of
//! the Cayley action, triality, the spinorial instanton condition, the
//! Weitzenböck constants and the contraction identity.
//!
//! The Cayley form acts on spinors through the Clifford embedding. Under the
//! fixed representation its exact spectrum is computed (never assumed): one
//! chirality carries a multiplicity-1 eigenvalue — the Spin(7) singlet — next
//! to a 7-dimensional eigenspace, and the opposite chirality is annihilated.
//! All downstream identity checks measure their constants against this
//! spectrum in raw form and in the normalization where the singlet eigenvalue
//! is +1.

use crate::cayley::{cayley_form, project2, TwoFormPart};
use crate::clifford::{clifford_action, clifford_apply, GammaRep, Spinor, SpinorEndo, SPINOR_DIM};
use crate::form::{basis_tuples, FormError, KForm};
use crate::linalg::{eigenspace, kernel_basis, rational_spectrum, RatMatrix, SpectrumError};
use crate::rational::{int, rat, Rational};
use num::traits::Zero;
use thiserror::Error;

/// Errors from spinor-space computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpinorError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("spectrum computation failed: {0}")]
    Spectrum(#[from] SpectrumError),
    #[error("per-chirality multiplicities sum to {plus} and {minus}, expected 8 and 8")]
    ChiralityCount { plus: usize, minus: usize },
    #[error("no eigenvalue of the Cayley action has multiplicity 1; singlet absent")]
    SingletMissing,
    #[error("grade {0} out of range for this operation")]
    GradeOutOfRange(usize),
    #[error("sum of conjugated actions is not a scalar multiple of the blade action")]
    NotScalarMultiple,
    #[error("conjugation constant differs between blades of the same grade")]
    BladeDependent,
    #[error("contraction eigenvalue depends on the frame index")]
    KappaNotConstant,
}

/// Chirality of a half-spinor space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn sign(self) -> i64 {
        match self {
            Chirality::Plus => 1,
            Chirality::Minus => -1,
        }
    }

    pub fn opposite(self) -> Chirality {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
        }
    }
}

/// Exact per-chirality eigendecomposition of the Cayley action.
///
/// Eigenvalues ascend within each chirality; multiplicities per chirality sum
/// to 8. `normalization` rescales the action so the singlet eigenvalue
/// becomes +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub plus: Vec<(Rational, usize)>,
    pub minus: Vec<(Rational, usize)>,
    pub normalization: Rational,
}

impl SpectrumReport {
    /// Eigenvalue whose total eigenspace is one-dimensional.
    pub fn singlet_eigenvalue(&self) -> Rational {
        self.normalization.recip()
    }

    /// Weighted trace over both chiralities; zero for any positive-grade
    /// blade sum.
    pub fn weighted_sum(&self) -> Rational {
        self.plus
            .iter()
            .chain(self.minus.iter())
            .map(|(l, m)| l * int(*m as i64))
            .sum()
    }
}

/// The Spin(7)-invariant spinor: the unique multiplicity-1 eigenvector of
/// the Cayley action, its chirality, and the raw eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletData {
    pub epsilon: Spinor,
    pub chirality: Chirality,
    pub mu: Rational,
}

fn chirality_eigenspace_dim(
    action: &RatMatrix,
    lambda: &Rational,
    chirality: &SpinorEndo,
    sign: i64,
) -> usize {
    let shifted = action.sub(&RatMatrix::identity(SPINOR_DIM).scale(lambda));
    let constraint = chirality
        .matrix()
        .sub(&RatMatrix::identity(SPINOR_DIM).scale(&int(sign)));
    kernel_basis(&shifted.vstack(&constraint)).len()
}

/// Exact eigendecomposition of the Cayley action restricted to each
/// half-spinor space.
///
/// Eigenvalues are found through the minimal polynomial and must exhaust
/// both 8-dimensional halves; anything else signals a convention bug and is
/// an error.
pub fn phi_spectrum(rep: &GammaRep) -> Result<SpectrumReport, SpinorError> {
    let action = clifford_action(&cayley_form(), rep);
    let full = rational_spectrum(action.matrix())?;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (lambda, _) in &full {
        let dp = chirality_eigenspace_dim(action.matrix(), lambda, rep.chirality(), 1);
        if dp > 0 {
            plus.push((lambda.clone(), dp));
        }
        let dm = chirality_eigenspace_dim(action.matrix(), lambda, rep.chirality(), -1);
        if dm > 0 {
            minus.push((lambda.clone(), dm));
        }
    }
    let (sp, sm) = (
        plus.iter().map(|(_, m)| m).sum::<usize>(),
        minus.iter().map(|(_, m)| m).sum::<usize>(),
    );
    if (sp, sm) != (8, 8) {
        return Err(SpinorError::ChiralityCount { plus: sp, minus: sm });
    }
    let mu = full
        .iter()
        .find(|(_, m)| *m == 1)
        .map(|(l, _)| l.clone())
        .ok_or(SpinorError::SingletMissing)?;
    Ok(SpectrumReport {
        plus,
        minus,
        normalization: mu.recip(),
    })
}

/// Extracts the singlet spinor: the unique (up to scale) eigenvector for the
/// multiplicity-1 eigenvalue, normalized so its first nonzero coordinate
/// is 1. Deterministic.
pub fn extract_singlet(rep: &GammaRep) -> Result<SingletData, SpinorError> {
    let spectrum = phi_spectrum(rep)?;
    let mu = spectrum.singlet_eigenvalue();
    let action = clifford_action(&cayley_form(), rep);
    let space = eigenspace(action.matrix(), &mu);
    if space.len() != 1 {
        return Err(SpinorError::SingletMissing);
    }
    let v = &space[0];
    let first = v.first_nonzero().expect("eigenvector is nonzero");
    let epsilon = Spinor::new(v.scale(&v.get(first).recip()));
    let image = rep.chirality().apply(&epsilon);
    let chirality = if image == epsilon {
        Chirality::Plus
    } else {
        Chirality::Minus
    };
    Ok(SingletData {
        epsilon,
        chirality,
        mu,
    })
}

/// Clifford multiplication of a one-form into the singlet: the triality map
/// `a ↦ a · ε`, a linear bijection onto the half-spinor space opposite the
/// singlet's.
pub fn triality(a: &KForm, singlet: &SingletData, rep: &GammaRep) -> Result<Spinor, SpinorError> {
    if a.grade() != 1 {
        return Err(FormError::GradeMismatch {
            expected: 1,
            found: a.grade(),
        }
        .into());
    }
    Ok(clifford_apply(a, rep, &singlet.epsilon))
}

/// Both faces of the instanton condition for a curvature two-form, computed
/// independently: vanishing of the 7-part projection, and annihilation of
/// the singlet spinor under Clifford action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstantonCheck {
    pub pi7_vanishes: bool,
    pub spinor_annihilates: bool,
}

impl InstantonCheck {
    pub fn agree(&self) -> bool {
        self.pi7_vanishes == self.spinor_annihilates
    }
}

/// Evaluates the two instanton conditions on a grade-2 form.
pub fn instanton_check(
    f: &KForm,
    singlet: &SingletData,
    rep: &GammaRep,
) -> Result<InstantonCheck, SpinorError> {
    let pi7 = project2(f, TwoFormPart::Seven)?;
    let image = clifford_apply(f, rep, &singlet.epsilon);
    Ok(InstantonCheck {
        pi7_vanishes: pi7.is_zero(),
        spinor_annihilates: image.is_zero(),
    })
}

/// The frame-sum conjugation constant for grade `p`: the single rational
/// `c_p` with `Σ_j γ_j · (ω·) · γ_j = c_p · (ω·)` for every basis blade `ω`
/// of grade `p`.
///
/// Under the pinned convention `c_p = (−1)^p (8 − 2p)`; the value is
/// computed from scratch for every blade and any deviation from a single
/// scalar multiple is an error.
pub fn weitzenbock_constant(p: usize, rep: &GammaRep) -> Result<Rational, SpinorError> {
    if p > 4 {
        return Err(SpinorError::GradeOutOfRange(p));
    }
    let mut constant: Option<Rational> = None;
    for tuple in basis_tuples(p) {
        let action = rep.blade_action(&tuple);
        let mut sum = SpinorEndo::zero();
        for j in 1..=8u8 {
            sum = sum.add(&rep.gamma(j).mul(&action).mul(rep.gamma(j)));
        }
        let c = scalar_ratio(&sum, &action).ok_or(SpinorError::NotScalarMultiple)?;
        match &constant {
            None => constant = Some(c),
            Some(existing) if *existing != c => return Err(SpinorError::BladeDependent),
            Some(_) => {}
        }
    }
    Ok(constant.expect("grade basis is nonempty"))
}

/// If `lhs == c · rhs` entrywise for a single rational `c`, returns `c`
/// (zero `rhs` only matches zero `lhs`).
fn scalar_ratio(lhs: &SpinorEndo, rhs: &SpinorEndo) -> Option<Rational> {
    let mut found: Option<Rational> = None;
    for r in 0..SPINOR_DIM {
        for c in 0..SPINOR_DIM {
            let b = rhs.matrix().get(r, c);
            if b.is_zero() {
                continue;
            }
            let ratio = lhs.matrix().get(r, c) / b;
            match &found {
                None => found = Some(ratio),
                Some(existing) if *existing != ratio => return None,
                Some(_) => {}
            }
        }
    }
    let c = found?;
    if lhs == &rhs.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// If `num == c · den` coordinatewise for a single rational `c`, returns
/// `c`.
pub fn spinor_ratio(num: &Spinor, den: &Spinor) -> Option<Rational> {
    let i = den.coords().first_nonzero()?;
    let c = num.coords().get(i) / den.coords().get(i);
    if num == &den.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// Everything the contraction-identity suite measures, in raw form and in
/// the singlet-normalized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionReport {
    /// `Σ_{b,c,d} Φ_{abcd} γ^b γ^c γ^d = 3·ν·[γ_a, (Φ·)]` holds entrywise
    /// for all `a`.
    pub contraction_residual_zero: bool,
    /// The computed matching factor `ν` in the commutator identity.
    pub contraction_normalization: Rational,
    /// Raw singlet eigenvalue of the Cayley action.
    pub mu: Rational,
    /// Raw `κ` with `Σ Φ_{abcd} γ^b γ^c γ^d · ε = κ · γ_a ε`, frame
    /// independent.
    pub kappa: Rational,
    /// `κ/μ`: the normalized contraction eigenvalue.
    pub kappa_over_mu: Rational,
    /// Raw eigenvalue of the Cayley action on the 7-dimensional eigenspace
    /// sharing the singlet's chirality.
    pub seven_part_raw: Rational,
    /// The same eigenvalue after singlet normalization.
    pub seven_part_normalized: Rational,
    /// Measured eigenvalue of the Cayley action on the triality images
    /// `γ_a ε` (the opposite chirality), when it is a single constant.
    pub triality_image_eigenvalue: Option<Rational>,
    /// The same after singlet normalization.
    pub triality_image_normalized: Option<Rational>,
    /// The arithmetic chain evaluated with the classical inputs (1, −1/7):
    /// `3(1 − (−1/7))`.
    pub chain_with_classical_inputs: Rational,
    /// The chain evaluated with the measured triality-image eigenvalue.
    pub chain_with_measured_inputs: Option<Rational>,
}

/// Runs the contraction-identity suite.
///
/// (i) verifies `Σ_{b,c,d} Φ_{abcd} γ^b γ^c γ^d = 3·ν·[γ_a, (Φ·)]` with the
/// factor `ν` computed, not assumed; (ii) computes the frame-independent `κ`
/// with `Σ Φ_{abcd} γ^{bcd} ε = κ γ_a ε`; (iii) reproduces the arithmetic
/// chain `3(x − y)` both for the classical inputs `(1, −1/7)` — giving 24/7 —
/// and for the measured eigenvalues.
pub fn contraction_identity_suite(
    singlet: &SingletData,
    rep: &GammaRep,
) -> Result<ContractionReport, SpinorError> {
    let phi = cayley_form();
    let action = clifford_action(&phi, rep);

    // full antisymmetric contraction: 3! times the increasing-tuple sum
    let contraction = |a: u8| -> SpinorEndo {
        let mut out = SpinorEndo::zero();
        for (tuple, coeff) in phi.terms() {
            if let Some(pos) = tuple.iter().position(|&i| i == a) {
                let mut rest = tuple.to_vec();
                rest.remove(pos);
                let sign = if pos % 2 == 0 { int(1) } else { int(-1) };
                out = out.add(&rep.blade_action(&rest).scale(&(coeff * sign * int(6))));
            }
        }
        out
    };

    let mut normalization: Option<Rational> = None;
    let mut residual_zero = true;
    let mut kappa: Option<Rational> = None;
    let mut image_eigenvalue: Option<Option<Rational>> = None;
    for a in 1..=8u8 {
        let lhs = contraction(a);
        let commutator = rep.gamma(a).commutator(&action).scale(&int(3));
        match scalar_ratio(&lhs, &commutator) {
            Some(nu) => match &normalization {
                None => normalization = Some(nu),
                Some(existing) if *existing != nu => residual_zero = false,
                Some(_) => {}
            },
            None => residual_zero = false,
        }

        let u = rep.gamma(a).apply(&singlet.epsilon);
        let w = lhs.apply(&singlet.epsilon);
        let k = spinor_ratio(&w, &u).ok_or(SpinorError::KappaNotConstant)?;
        match &kappa {
            None => kappa = Some(k),
            Some(existing) if *existing != k => return Err(SpinorError::KappaNotConstant),
            Some(_) => {}
        }

        let measured = spinor_ratio(&action.apply(&u), &u);
        match &image_eigenvalue {
            None => image_eigenvalue = Some(measured),
            Some(existing) if *existing != measured => image_eigenvalue = Some(None),
            Some(_) => {}
        }
    }
    let kappa = kappa.expect("eight frame indices were checked");
    let normalization = normalization.unwrap_or_else(Rational::zero);
    let spectrum = phi_spectrum(rep)?;
    let same_side = match singlet.chirality {
        Chirality::Plus => &spectrum.plus,
        Chirality::Minus => &spectrum.minus,
    };
    let seven_part_raw = same_side
        .iter()
        .find(|(l, m)| *m == 7 && *l != singlet.mu)
        .map(|(l, _)| l.clone())
        .ok_or(SpinorError::SingletMissing)?;
    let seven_part_normalized = &seven_part_raw / &singlet.mu;
    let triality_image_eigenvalue = image_eigenvalue.flatten();
    let triality_image_normalized = triality_image_eigenvalue
        .as_ref()
        .map(|l| l / &singlet.mu);
    let chain = |y: &Rational| int(3) * (int(1) - y);
    Ok(ContractionReport {
        contraction_residual_zero: residual_zero,
        contraction_normalization: normalization,
        mu: singlet.mu.clone(),
        kappa: kappa.clone(),
        kappa_over_mu: &kappa / &singlet.mu,
        seven_part_raw,
        seven_part_normalized,
        chain_with_classical_inputs: chain(&rat(-1, 7)),
        chain_with_measured_inputs: triality_image_normalized.as_ref().map(&chain),
        triality_image_eigenvalue,
        triality_image_normalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_gamma_rep;
    use crate::linalg::{rank, RatMatrix, RatVector};
    use proptest::prelude::*;
    use std::sync::LazyLock;

    static FIXTURE: LazyLock<(GammaRep, SingletData)> = LazyLock::new(|| {
        let rep = build_gamma_rep();
        let singlet = extract_singlet(&rep).expect("singlet exists");
        (rep, singlet)
    });

    #[test]
    fn spectrum_is_pinned() {
        let (rep, singlet) = &*FIXTURE;
        let spectrum = phi_spectrum(rep).unwrap();
        assert_eq!(spectrum.plus, vec![(int(-14), 1), (int(2), 7)]);
        assert_eq!(spectrum.minus, vec![(int(0), 8)]);
        assert_eq!(spectrum.normalization, rat(-1, 14));
        assert_eq!(spectrum.weighted_sum(), int(0));
        assert_eq!(singlet.mu, int(-14));
        assert_eq!(singlet.chirality, Chirality::Plus);
    }

    #[test]
    fn trace_of_action_vanishes() {
        let (rep, _) = &*FIXTURE;
        assert_eq!(clifford_action(&cayley_form(), rep).trace(), int(0));
    }

    #[test]
    fn singlet_is_deterministic_and_eigen() {
        let (rep, singlet) = &*FIXTURE;
        let again = extract_singlet(rep).unwrap();
        assert_eq!(&again, singlet);
        let action = clifford_action(&cayley_form(), rep);
        let image = action.apply(&singlet.epsilon);
        assert_eq!(image, singlet.epsilon.scale(&singlet.mu));
        // first nonzero coordinate is 1
        let first = singlet.epsilon.coords().first_nonzero().unwrap();
        assert_eq!(singlet.epsilon.coords().get(first), &int(1));
        assert_eq!(singlet.epsilon.norm_sq(), int(2));
    }

    #[test]
    fn triality_is_a_bijection_with_constant_norm() {
        let (rep, singlet) = &*FIXTURE;
        let mut columns = RatMatrix::zeros(16, 8);
        for a in 1..=8u8 {
            let img = triality(&KForm::blade(&[a]).unwrap(), singlet, rep).unwrap();
            // opposite chirality
            let flipped = rep.chirality().apply(&img);
            assert_eq!(flipped, img.scale(&int(-singlet.chirality.sign())));
            for r in 0..16 {
                columns.set(r, a as usize - 1, img.coords().get(r).clone());
            }
        }
        assert_eq!(rank(&columns), 8);
        // a single norm scaling constant across arbitrary one-forms
        let samples = [
            KForm::blade(&[1]).unwrap(),
            KForm::blade(&[2]).unwrap().scale(&rat(3, 5)),
            KForm::from_terms(1, [(vec![1], int(1)), (vec![4], int(-2)), (vec![8], rat(1, 3))])
                .unwrap(),
        ];
        for a in samples {
            let img = triality(&a, singlet, rep).unwrap();
            assert_eq!(img.norm_sq(), a.norm_sq() * int(2));
        }
        // zero maps to zero and wrong grades error
        assert!(triality(&KForm::zero(1).unwrap(), singlet, rep)
            .unwrap()
            .is_zero());
        assert!(triality(&KForm::blade(&[1, 2]).unwrap(), singlet, rep).is_err());
    }

    #[test]
    fn instanton_conditions_on_eigenvectors() {
        let (rep, singlet) = &*FIXTURE;
        let l = crate::cayley::lambda2_matrix();
        let twenty_one = crate::linalg::eigenspace(&l, &int(-1));
        let seven = crate::linalg::eigenspace(&l, &int(3));
        for v in twenty_one.iter().take(4) {
            let f = KForm::from_vector(2, v).unwrap();
            let check = instanton_check(&f, singlet, rep).unwrap();
            assert!(check.pi7_vanishes && check.spinor_annihilates);
        }
        for v in seven.iter().take(4) {
            let f = KForm::from_vector(2, v).unwrap();
            let check = instanton_check(&f, singlet, rep).unwrap();
            assert!(!check.pi7_vanishes && !check.spinor_annihilates);
        }
        let zero = instanton_check(&KForm::zero(2).unwrap(), singlet, rep).unwrap();
        assert!(zero.pi7_vanishes && zero.spinor_annihilates);
    }

    #[test]
    fn spinor_map_kernel_is_21_dimensional() {
        let (rep, singlet) = &*FIXTURE;
        // matrix of F ↦ (F·)ε over the 28 basis two-forms
        let mut m = RatMatrix::zeros(16, 28);
        for (col, tuple) in basis_tuples(2).iter().enumerate() {
            let img = rep.blade_action(tuple).apply(&singlet.epsilon);
            for r in 0..16 {
                m.set(r, col, img.coords().get(r).clone());
            }
        }
        assert_eq!(kernel_basis(&m).len(), 21);
        assert_eq!(rank(&m), 7);
    }

    #[test]
    fn weitzenbock_constants_table() {
        let (rep, _) = &*FIXTURE;
        let expected = [int(8), int(-6), int(4), int(-2), int(0)];
        for (p, want) in expected.iter().enumerate() {
            assert_eq!(&weitzenbock_constant(p, rep).unwrap(), want);
        }
        assert!(matches!(
            weitzenbock_constant(5, rep),
            Err(SpinorError::GradeOutOfRange(5))
        ));
    }

    #[test]
    fn contraction_suite_values() {
        let (rep, singlet) = &*FIXTURE;
        let report = contraction_identity_suite(singlet, rep).unwrap();
        assert!(report.contraction_residual_zero);
        assert_eq!(report.contraction_normalization, int(1));
        assert_eq!(report.kappa, int(-42));
        assert_eq!(report.kappa_over_mu, int(3));
        assert_eq!(report.seven_part_raw, int(2));
        assert_eq!(report.seven_part_normalized, rat(-1, 7));
        assert_eq!(report.triality_image_eigenvalue, Some(int(0)));
        assert_eq!(report.triality_image_normalized, Some(int(0)));
        assert_eq!(report.chain_with_classical_inputs, rat(24, 7));
        assert_eq!(report.chain_with_measured_inputs, Some(int(3)));
        // the chain with measured inputs reproduces κ/μ
        assert_eq!(
            report.chain_with_measured_inputs.as_ref().unwrap(),
            &report.kappa_over_mu
        );
        // the classical chain is the exact arithmetic 3·(1 + 1/7)
        assert_eq!(int(3) * (int(1) + rat(1, 7)), rat(24, 7));
    }

    fn arb_two_form() -> impl Strategy<Value = KForm> {
        proptest::collection::vec(-4i64..=4, 28).prop_map(|coeffs| {
            KForm::from_terms(
                2,
                basis_tuples(2)
                    .into_iter()
                    .zip(coeffs.into_iter().map(int)),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn instanton_conditions_agree(f in arb_two_form()) {
            let (rep, singlet) = &*FIXTURE;
            let check = instanton_check(&f, singlet, rep).unwrap();
            prop_assert!(check.agree());
        }

        #[test]
        fn triality_is_linear(c1 in -4i64..=4, c2 in -4i64..=4) {
            let (rep, singlet) = &*FIXTURE;
            let a = KForm::blade(&[2]).unwrap().scale(&int(c1));
            let b = KForm::blade(&[6]).unwrap().scale(&int(c2));
            let lhs = triality(&a.add(&b), singlet, rep).unwrap();
            let rhs = triality(&a, singlet, rep).unwrap().add(&triality(&b, singlet, rep).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn spectrum_vectors_respect_chirality_projectors() {
        let (rep, _) = &*FIXTURE;
        let (p_plus, p_minus) = crate::clifford::chirality_projectors(rep);
        let action = clifford_action(&cayley_form(), rep);
        // the 0-eigenspace lies entirely in S⁻
        for v in eigenspace(action.matrix(), &int(0)) {
            let s = Spinor::new(RatVector::from_entries(
                (0..16).map(|i| v.get(i).clone()).collect(),
            ));
            assert_eq!(p_minus.apply(&s), s);
            assert!(p_plus.apply(&s).is_zero());
        }
    }
}
