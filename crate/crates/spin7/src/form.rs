//! Exterior forms on eight-dimensional Euclidean space.
//!
//! A [`KForm`] stores a grade together with a sparse map from strictly
//! increasing index tuples (indices 1..=8) to rational coefficients; zero
//! coefficients are never stored, so equality of maps is equality of forms.
//! The metric is the standard Euclidean one with the basis blades
//! orthonormal, and the orientation is `dx^1 ∧ … ∧ dx^8`, which pins the sign
//! of the Hodge star once and for all.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::RatVector;
use crate::rational::{format_rational, parse_rational, Rational};
use num::traits::Zero;
use thiserror::Error;

/// Dimension of the underlying space.
pub const DIM: u8 = 8;

/// Errors from form construction and algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("grade {0} out of range 0..=8")]
    GradeOutOfRange(usize),
    #[error("expected grade {expected}, found grade {found}")]
    GradeMismatch { expected: usize, found: usize },
    #[error("wedge overflows top grade: {0} + {1} > 8")]
    GradeOverflow(usize, usize),
    #[error("index tuple {0:?} is not strictly increasing within 1..=8")]
    BadTuple(Vec<u8>),
    #[error("index tuple {tuple:?} has length {}, expected {grade}", tuple.len())]
    TupleLength { tuple: Vec<u8>, grade: usize },
}

/// Parse failures for the `KForm` text document format, with a line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormParseError {
    pub line: usize,
    pub message: String,
}

fn tuple_ok(tuple: &[u8]) -> bool {
    tuple.windows(2).all(|w| w[0] < w[1])
        && tuple.iter().all(|&i| (1..=DIM).contains(&i))
}

/// A grade-`k` exterior form with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KForm {
    grade: usize,
    components: BTreeMap<Vec<u8>, Rational>,
}

impl KForm {
    /// The zero form of the given grade.
    pub fn zero(grade: usize) -> Result<KForm, FormError> {
        if grade > DIM as usize {
            return Err(FormError::GradeOutOfRange(grade));
        }
        Ok(KForm {
            grade,
            components: BTreeMap::new(),
        })
    }

    /// A single basis blade `dx^{i1} ∧ … ∧ dx^{ik}` with coefficient 1.
    pub fn blade(indices: &[u8]) -> Result<KForm, FormError> {
        KForm::from_terms(
            indices.len(),
            [(indices.to_vec(), Rational::from_integer(1.into()))],
        )
    }

    /// The constant (grade-0) form.
    pub fn constant(value: Rational) -> KForm {
        let mut f = KForm::zero(0).expect("grade 0 is valid");
        f.insert(vec![], value);
        f
    }

    /// Builds a form from `(tuple, coefficient)` terms, validating every
    /// tuple. Zero coefficients are dropped; duplicate tuples accumulate.
    pub fn from_terms(
        grade: usize,
        terms: impl IntoIterator<Item = (Vec<u8>, Rational)>,
    ) -> Result<KForm, FormError> {
        let mut form = KForm::zero(grade)?;
        for (tuple, coeff) in terms {
            if tuple.len() != grade {
                return Err(FormError::TupleLength { tuple, grade });
            }
            if !tuple_ok(&tuple) {
                return Err(FormError::BadTuple(tuple));
            }
            form.add_to(tuple, coeff);
        }
        Ok(form)
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of stored (nonzero) components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Coefficient of a basis blade (zero when absent).
    pub fn coeff(&self, tuple: &[u8]) -> Rational {
        self.components.get(tuple).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterates stored terms in lexicographic tuple order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rational)> {
        self.components.iter().map(|(t, c)| (t.as_slice(), c))
    }

    fn insert(&mut self, tuple: Vec<u8>, coeff: Rational) {
        if !coeff.is_zero() {
            self.components.insert(tuple, coeff);
        }
    }

    fn add_to(&mut self, tuple: Vec<u8>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.components.entry(tuple);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Sum of forms of equal grade. Panics on a grade mismatch, which is a
    /// programming error at every call site in this crate.
    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.grade, other.grade, "grade mismatch in form addition");
        let mut out = self.clone();
        for (tuple, coeff) in &other.components {
            out.add_to(tuple.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, factor: &Rational) -> KForm {
        if factor.is_zero() {
            return KForm {
                grade: self.grade,
                components: BTreeMap::new(),
            };
        }
        KForm {
            grade: self.grade,
            components: self
                .components
                .iter()
                .map(|(t, c)| (t.clone(), c * factor))
                .collect(),
        }
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-Rational::from_integer(1.into()))
    }

    /// Exterior product with exact permutation signs.
    pub fn wedge(&self, other: &KForm) -> Result<KForm, FormError> {
        if self.grade + other.grade > DIM as usize {
            return Err(FormError::GradeOverflow(self.grade, other.grade));
        }
        let mut out = KForm::zero(self.grade + other.grade)?;
        for (a, ca) in &self.components {
            for (b, cb) in &other.components {
                if let Some((tuple, sign)) = merge_tuples(a, b) {
                    let mut coeff = ca * cb;
                    if sign < 0 {
                        coeff = -coeff;
                    }
                    out.add_to(tuple, coeff);
                }
            }
        }
        Ok(out)
    }

    /// Euclidean Hodge star for the orientation `dx^1 ∧ … ∧ dx^8`.
    ///
    /// On grade `k` the double star is `(-1)^{k(8-k)}`: the identity on even
    /// grades, minus the identity on odd grades.
    pub fn hodge_star(&self) -> KForm {
        let mut out = KForm::zero(DIM as usize - self.grade).expect("complement grade is valid");
        for (tuple, coeff) in &self.components {
            let (complement, sign) = hodge_complement(tuple);
            let mut c = coeff.clone();
            if sign < 0 {
                c = -c;
            }
            out.insert(complement, c);
        }
        out
    }

    /// Component inner product: basis blades are orthonormal.
    pub fn inner(&self, other: &KForm) -> Rational {
        assert_eq!(self.grade, other.grade, "grade mismatch in inner product");
        let mut acc = Rational::zero();
        for (tuple, coeff) in &self.components {
            if let Some(c) = other.components.get(tuple) {
                acc += coeff * c;
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    /// Coefficient vector over the lexicographic grade basis.
    pub fn to_vector(&self) -> RatVector {
        let basis = basis_tuples(self.grade);
        let mut v = RatVector::zeros(basis.len());
        for (i, tuple) in basis.iter().enumerate() {
            let c = self.coeff(tuple);
            if !c.is_zero() {
                v.set(i, c);
            }
        }
        v
    }

    /// Inverse of [`KForm::to_vector`].
    pub fn from_vector(grade: usize, v: &RatVector) -> Result<KForm, FormError> {
        let basis = basis_tuples(grade);
        assert_eq!(v.len(), basis.len(), "vector length does not match grade basis");
        KForm::from_terms(
            grade,
            basis
                .into_iter()
                .enumerate()
                .map(|(i, t)| (t, v.get(i).clone())),
        )
    }

    /// Parses the text document format: a header `grade k`, then one line per
    /// component `i1 i2 ... ik  p/q`. Blank lines and `#` comments are
    /// ignored. Duplicate tuples are rejected.
    pub fn parse_document(text: &str) -> Result<KForm, FormParseError> {
        let err = |line: usize, message: String| FormParseError { line, message };
        let mut form: Option<KForm> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match &mut form {
                None => {
                    if fields.len() != 2 || fields[0] != "grade" {
                        return Err(err(line_no, "expected header `grade k`".into()));
                    }
                    let grade: usize = fields[1]
                        .parse()
                        .map_err(|_| err(line_no, format!("bad grade `{}`", fields[1])))?;
                    form = Some(
                        KForm::zero(grade)
                            .map_err(|e| err(line_no, e.to_string()))?,
                    );
                }
                Some(f) => {
                    if fields.len() != f.grade + 1 {
                        return Err(err(
                            line_no,
                            format!(
                                "expected {} indices and a coefficient, found {} fields",
                                f.grade,
                                fields.len()
                            ),
                        ));
                    }
                    let mut tuple = Vec::with_capacity(f.grade);
                    for s in &fields[..f.grade] {
                        let i: u8 = s
                            .parse()
                            .map_err(|_| err(line_no, format!("bad index `{s}`")))?;
                        tuple.push(i);
                    }
                    if !tuple_ok(&tuple) {
                        return Err(err(
                            line_no,
                            format!("indices {tuple:?} must be strictly increasing within 1..=8"),
                        ));
                    }
                    if f.components.contains_key(&tuple) {
                        return Err(err(line_no, format!("duplicate tuple {tuple:?}")));
                    }
                    let coeff = parse_rational(fields[f.grade]).ok_or_else(|| {
                        err(line_no, format!("bad rational `{}`", fields[f.grade]))
                    })?;
                    f.insert(tuple, coeff);
                }
            }
        }
        form.ok_or_else(|| err(0, "empty document: missing `grade k` header".into()))
    }

    /// Canonical text document: header, then components in lexicographic
    /// order with reduced rationals. Inverse of [`KForm::parse_document`].
    pub fn document(&self) -> String {
        let mut out = format!("grade {}\n", self.grade);
        for (tuple, coeff) in &self.components {
            let indices: Vec<String> = tuple.iter().map(u8::to_string).collect();
            out.push_str(&format!(
                "{}  {}\n",
                indices.join(" "),
                format_rational(coeff)
            ));
        }
        out
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (tuple, coeff) in &self.components {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if tuple.is_empty() {
                write!(f, "{}", format_rational(coeff))?;
            } else {
                let idx: Vec<String> = tuple.iter().map(u8::to_string).collect();
                write!(f, "{}·dx{}", format_rational(coeff), idx.join(""))?;
            }
        }
        Ok(())
    }
}

/// Concatenation sign of two disjoint increasing tuples: `None` when they
/// share an index, otherwise the merged tuple and the parity of the merge.
fn merge_tuples(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i8)> {
    let mut swaps = 0usize;
    for &x in a {
        if b.contains(&x) {
            return None;
        }
        swaps += b.iter().filter(|&&y| y < x).count();
    }
    let mut merged: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
    merged.sort_unstable();
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    Some((merged, sign))
}

/// Complement tuple and the sign of the permutation `(tuple, complement)`
/// relative to `(1, …, 8)`.
fn hodge_complement(tuple: &[u8]) -> (Vec<u8>, i8) {
    let complement: Vec<u8> = (1..=DIM).filter(|i| !tuple.contains(i)).collect();
    let mut inversions = 0usize;
    let concat: Vec<u8> = tuple.iter().chain(complement.iter()).copied().collect();
    for i in 0..concat.len() {
        for j in (i + 1)..concat.len() {
            if concat[i] > concat[j] {
                inversions += 1;
            }
        }
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    (complement, sign)
}

/// All strictly increasing index tuples of the given grade, in lexicographic
/// order. This fixes the basis ordering used by every operator matrix.
pub fn basis_tuples(grade: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(grade);
    fn recurse(start: u8, remaining: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..=(DIM - remaining as u8 + 1) {
            current.push(i);
            recurse(i + 1, remaining - 1, current, out);
            current.pop();
        }
    }
    recurse(1, grade, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn dx(indices: &[u8]) -> KForm {
        KForm::blade(indices).unwrap()
    }

    #[test]
    fn wedge_basics() {
        let d12 = dx(&[1]).wedge(&dx(&[2])).unwrap();
        assert_eq!(d12, dx(&[1, 2]));
        let d21 = dx(&[2]).wedge(&dx(&[1])).unwrap();
        assert_eq!(d21, dx(&[1, 2]).neg());
        let alpha = dx(&[1]).add(&dx(&[2]));
        assert!(alpha.wedge(&alpha).unwrap().is_zero());
    }

    #[test]
    fn wedge_grade_overflow() {
        let five = dx(&[1, 2, 3, 4, 5]);
        assert_eq!(
            five.wedge(&five).unwrap_err(),
            FormError::GradeOverflow(5, 5)
        );
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(
            KForm::constant(int(1)).hodge_star(),
            dx(&[1, 2, 3, 4, 5, 6, 7, 8])
        );
        assert_eq!(dx(&[1, 2, 3, 4]).hodge_star(), dx(&[5, 6, 7, 8]));
    }

    // Independent sign oracle: the full Levi-Civita symbol on eight indices.
    fn eps_sign(perm: &[u8]) -> i64 {
        let mut sign = 1i64;
        for i in 0..perm.len() {
            for j in (i + 1)..perm.len() {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    #[test]
    fn hodge_matches_epsilon_oracle_on_all_blades() {
        for grade in 0..=8usize {
            for tuple in basis_tuples(grade) {
                let star = dx(&tuple).hodge_star();
                let complement: Vec<u8> = (1..=8).filter(|i| !tuple.contains(i)).collect();
                let concat: Vec<u8> =
                    tuple.iter().chain(complement.iter()).copied().collect();
                let expected = eps_sign(&concat);
                assert_eq!(star.coeff(&complement), int(expected));
                assert_eq!(star.len(), 1);
            }
        }
    }

    #[test]
    fn double_star_sign_on_all_blades() {
        for grade in 0..=8usize {
            for tuple in basis_tuples(grade) {
                let b = dx(&tuple);
                let twice = b.hodge_star().hodge_star();
                if grade % 2 == 0 {
                    assert_eq!(twice, b);
                } else {
                    assert_eq!(twice, b.neg());
                }
            }
        }
    }

    #[test]
    fn document_round_trip() {
        let f = KForm::from_terms(
            2,
            [
                (vec![1, 2], rat(3, 4)),
                (vec![5, 6], int(-1)),
            ],
        )
        .unwrap();
        let doc = f.document();
        assert_eq!(doc, "grade 2\n1 2  3/4\n5 6  -1\n");
        assert_eq!(KForm::parse_document(&doc).unwrap(), f);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = KForm::parse_document("grade 2\n1 2  1/1\n2 1  5\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = KForm::parse_document("grade 9\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = KForm::parse_document("# nothing\n").unwrap_err();
        assert_eq!(e.line, 0);
    }

    #[test]
    fn bad_tuples_rejected() {
        assert!(matches!(
            KForm::from_terms(2, [(vec![2u8, 2], int(1))]),
            Err(FormError::BadTuple(_))
        ));
        assert!(matches!(
            KForm::from_terms(2, [(vec![0u8, 1], int(1))]),
            Err(FormError::BadTuple(_))
        ));
        assert!(matches!(
            KForm::from_terms(1, [(vec![1u8, 2], int(1))]),
            Err(FormError::TupleLength { .. })
        ));
    }

    #[test]
    fn basis_sizes_are_binomial() {
        let sizes: Vec<usize> = (0..=8).map(|k| basis_tuples(k).len()).collect();
        assert_eq!(sizes, vec![1, 8, 28, 56, 70, 56, 28, 8, 1]);
    }

    fn arb_form(grade: usize) -> impl Strategy<Value = KForm> {
        let n = basis_tuples(grade).len();
        proptest::collection::vec(-5i64..=5, n).prop_map(move |coeffs| {
            KForm::from_terms(
                grade,
                basis_tuples(grade)
                    .into_iter()
                    .zip(coeffs.into_iter().map(int)),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn star_is_a_componentwise_isometry(a in arb_form(2), b in arb_form(2)) {
            prop_assert_eq!(a.hodge_star().inner(&b.hodge_star()), a.inner(&b));
        }

        #[test]
        fn wedge_is_bilinear(a in arb_form(1), b in arb_form(1), c in arb_form(1)) {
            let lhs = a.add(&b).wedge(&c).unwrap();
            let rhs = a.wedge(&c).unwrap().add(&b.wedge(&c).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wedge_graded_anticommutes(a in arb_form(1), b in arb_form(2)) {
            // odd·even: a∧b = (+1)^{1·2} b∧a
            prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        }

        #[test]
        fn vector_round_trip(a in arb_form(3)) {
            let v = a.to_vector();
            prop_assert_eq!(KForm::from_vector(3, &v).unwrap(), a);
        }
    }
}
