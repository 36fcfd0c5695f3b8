//! The Cayley four-form and the invariant decompositions of two- and
//! three-forms.
//!
//! The stabilizer of the Cayley form inside GL(8) is Spin(7), and the form
//! splits the exterior bundles into irreducible pieces: two-forms into a
//! 7-dimensional and a 21-dimensional part, three-forms into an 8- and a
//! 48-dimensional part. Both splittings are realized here as exact rational
//! projectors, with every eigenvalue and rank computed rather than assumed.
//!
//! The operator behind the two-form split is `L(α) = ∗(α ∧ Φ)`. Its spectrum
//! under the pinned orientation is {+3 with multiplicity 7, −1 with
//! multiplicity 21}; the −1 eigenspace is the defining relation of the
//! 21-dimensional part, while the +3 eigenvalue is derived by the exact
//! eigendecomposition (it is pinned here, not an input). The three-form
//! split comes from the injection `J(θ) = ∗(θ ∧ Φ)` of one-forms into
//! three-forms, whose exact Gram matrix is a single positive rational
//! multiple of the identity.

use crate::form::{basis_tuples, FormError, KForm};
use crate::linalg::{inverse, rank, RatMatrix};
use crate::rational::{int, rat, Rational};
use num::traits::Zero;

/// The Cayley four-form: fourteen terms, every coefficient ±1, self-dual.
pub fn cayley_form() -> KForm {
    let terms: [(&[u8; 4], i64); 14] = [
        (&[1, 2, 3, 4], 1),
        (&[1, 2, 5, 6], 1),
        (&[1, 2, 7, 8], 1),
        (&[1, 3, 5, 7], 1),
        (&[1, 3, 6, 8], -1),
        (&[1, 4, 5, 8], -1),
        (&[1, 4, 6, 7], -1),
        (&[2, 3, 5, 8], -1),
        (&[2, 3, 6, 7], -1),
        (&[2, 4, 5, 7], -1),
        (&[2, 4, 6, 8], 1),
        (&[3, 4, 5, 6], 1),
        (&[3, 4, 7, 8], 1),
        (&[5, 6, 7, 8], 1),
    ];
    KForm::from_terms(4, terms.map(|(t, c)| (t.to_vec(), int(c))))
        .expect("the Cayley terms are valid 4-form tuples")
}

/// The flat model structure: the Cayley form, the implicit Euclidean metric
/// and the orientation `dx^1 ∧ … ∧ dx^8`.
#[derive(Debug, Clone)]
pub struct CayleyStructure {
    pub phi: KForm,
}

impl Default for CayleyStructure {
    fn default() -> Self {
        CayleyStructure { phi: cayley_form() }
    }
}

/// Which part of the two-form split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoFormPart {
    Seven,
    TwentyOne,
}

/// Which part of the three-form split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreeFormPart {
    Eight,
    FortyEight,
}

fn expect_grade(form: &KForm, grade: usize) -> Result<(), FormError> {
    if form.grade() != grade {
        return Err(FormError::GradeMismatch {
            expected: grade,
            found: form.grade(),
        });
    }
    Ok(())
}

/// The symmetric operator `L(α) = ∗(α ∧ Φ)` on two-forms.
pub fn lambda2_operator(alpha: &KForm) -> Result<KForm, FormError> {
    expect_grade(alpha, 2)?;
    Ok(alpha.wedge(&cayley_form())?.hodge_star())
}

/// Matrix of `L` over the lexicographic two-form basis (28×28).
pub fn lambda2_matrix() -> RatMatrix {
    operator_matrix(2, |alpha| lambda2_operator(alpha).expect("grade 2 input"))
}

/// Projection of a two-form onto the 7- or 21-dimensional part.
///
/// With the spectrum {+3, −1} of `L`, the projectors are `(L + I)/4` and
/// `(3I − L)/4`; they sum to the identity and square to themselves.
pub fn project2(alpha: &KForm, which: TwoFormPart) -> Result<KForm, FormError> {
    let l_alpha = lambda2_operator(alpha)?;
    let quarter = rat(1, 4);
    Ok(match which {
        TwoFormPart::Seven => l_alpha.add(alpha).scale(&quarter),
        TwoFormPart::TwentyOne => alpha.scale(&int(3)).sub(&l_alpha).scale(&quarter),
    })
}

/// The exact three-form projectors onto the 8- and 48-dimensional parts,
/// together with the injection `J` they are built from and its Gram
/// constant.
#[derive(Debug, Clone)]
pub struct Lambda3Projectors {
    /// 56×56 projector onto the image of `J` (rank 8).
    pub p8: RatMatrix,
    /// 56×56 complementary projector (rank 48).
    pub p48: RatMatrix,
    /// 56×8 matrix of `J(θ) = ∗(θ ∧ Φ)` over lexicographic bases.
    pub j: RatMatrix,
    /// The single positive rational `c` with `JᵀJ = c·I`, computed exactly.
    pub gram_constant: Rational,
}

/// Builds the three-form projectors: `π₈ = J (JᵀJ)⁻¹ Jᵀ`, `π₄₈ = I − π₈`.
///
/// That `JᵀJ` is a multiple of the identity is checked entrywise, not
/// assumed; the multiple is returned as `gram_constant`.
pub fn lambda3_projectors() -> Lambda3Projectors {
    let phi = cayley_form();
    let three_basis = basis_tuples(3);
    let mut j = RatMatrix::zeros(three_basis.len(), 8);
    for a in 1..=8u8 {
        let theta = KForm::blade(&[a]).expect("grade 1 blade");
        let image = theta
            .wedge(&phi)
            .expect("1 + 4 ≤ 8")
            .hodge_star();
        let col = image.to_vector();
        for r in 0..col.len() {
            j.set(r, a as usize - 1, col.get(r).clone());
        }
    }
    let gram = j.transpose().mul(&j);
    let c = gram.get(0, 0).clone();
    assert!(
        c > Rational::zero(),
        "Gram constant of the three-form injection must be positive"
    );
    assert_eq!(
        gram,
        RatMatrix::identity(8).scale(&c),
        "JᵀJ must be an exact multiple of the identity"
    );
    let gram_inv = inverse(&gram).expect("JᵀJ is invertible");
    let p8 = j.mul(&gram_inv).mul(&j.transpose());
    let p48 = RatMatrix::identity(three_basis.len()).sub(&p8);
    Lambda3Projectors {
        p8,
        p48,
        j,
        gram_constant: c,
    }
}

/// Projection of a three-form onto the 8- or 48-dimensional part.
pub fn project3(
    omega: &KForm,
    which: ThreeFormPart,
    projectors: &Lambda3Projectors,
) -> Result<KForm, FormError> {
    expect_grade(omega, 3)?;
    let v = omega.to_vector();
    let projected = match which {
        ThreeFormPart::Eight => projectors.p8.mul_vec(&v),
        ThreeFormPart::FortyEight => projectors.p48.mul_vec(&v),
    };
    KForm::from_vector(3, &projected)
}

/// Matrix of a linear operator on grade-`k` forms over the lexicographic
/// basis.
pub fn operator_matrix(grade: usize, op: impl Fn(&KForm) -> KForm) -> RatMatrix {
    let basis = basis_tuples(grade);
    let n = basis.len();
    let mut m = RatMatrix::zeros(n, n);
    for (col, tuple) in basis.iter().enumerate() {
        let image = op(&KForm::blade(tuple).expect("basis blade"));
        let v = image.to_vector();
        for row in 0..n {
            let e = v.get(row);
            if !e.is_zero() {
                m.set(row, col, e.clone());
            }
        }
    }
    m
}

/// Ranks of the two three-form projectors, computed exactly.
pub fn lambda3_ranks(projectors: &Lambda3Projectors) -> (usize, usize) {
    (rank(&projectors.p8), rank(&projectors.p48))
}
