//! Scalar curvature arithmetic, the Lichnerowicz-type rigidity predicate and
//! the homogeneous-example catalog.
//!
//! The scalar curvature of the underlying metric is determined by the
//! pointwise norms of the Lee form and the torsion together with the
//! codifferential of the Lee form:
//!
//! ```text
//! Scal = (49/18)·‖θ‖² − (1/12)·‖T‖² + (7/2)·δθ
//! ```
//!
//! An instanton is rigid when the smallest eigenvalue of its curvature
//! operator exceeds `9 − Scal/4` (strictly: at the boundary the vanishing
//! argument gives nothing). For the flat instanton the eigenvalue is 0 and
//! the predicate collapses to `Scal > 36`.

use crate::rational::{int, parse_rational, rat, Rational};
use num::traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigidityError {
    #[error("squared norm inputs must be nonnegative, got {0}")]
    NegativeNorm(Rational),
}

/// Catalog file parse failure, with a line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct CatalogParseError {
    pub line: usize,
    pub message: String,
}

/// A named homogeneous example: the geometric constants entering the scalar
/// curvature formula, plus the expected curvature when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryRecord {
    pub name: String,
    pub theta_norm_sq: Rational,
    pub torsion_norm_sq: Rational,
    pub delta_theta: Rational,
    pub expected_scal: Option<Rational>,
}

/// Outcome of the rigidity predicate, with the margin kept exact for
/// reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub scal: Rational,
    pub lambda_l: Rational,
    /// `9 − Scal/4`.
    pub threshold: Rational,
    /// `λ − threshold`; positive means rigid.
    pub margin: Rational,
    pub rigid: bool,
}

/// Characteristic-class data for the admissibility check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharClassData {
    pub p1_sq: i64,
    pub p2: i64,
    pub euler: i64,
}

/// Sign choice in the admissibility condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilitySign {
    Plus,
    Minus,
}

/// `Scal = (49/18)·‖θ‖² − (1/12)·‖T‖² + (7/2)·δθ`, exact.
pub fn scalar_curvature(
    theta_sq: &Rational,
    torsion_sq: &Rational,
    delta_theta: &Rational,
) -> Result<Rational, RigidityError> {
    for norm in [theta_sq, torsion_sq] {
        if norm < &Rational::zero() {
            return Err(RigidityError::NegativeNorm(norm.clone()));
        }
    }
    Ok(rat(49, 18) * theta_sq - rat(1, 12) * torsion_sq + rat(7, 2) * delta_theta)
}

/// Evaluates the rigidity predicate `λ > 9 − Scal/4` (strict inequality).
pub fn rigidity_verdict(lambda_l: &Rational, scal: &Rational) -> RigidityVerdict {
    let threshold = int(9) - scal / int(4);
    let margin = lambda_l - &threshold;
    RigidityVerdict {
        scal: scal.clone(),
        lambda_l: lambda_l.clone(),
        rigid: margin > Rational::zero(),
        threshold,
        margin,
    }
}

/// The flat-instanton threshold: with a vanishing curvature operator the
/// predicate reduces to `Scal > 36`. Also cross-checks the reduction against
/// [`rigidity_verdict`] on a boundary-spanning sample.
pub fn flat_instanton_threshold() -> Rational {
    let threshold = int(36);
    for sample in [int(0), int(35), rat(71, 2), int(36), rat(73, 2), int(37), int(100)] {
        let verdict = rigidity_verdict(&Rational::zero(), &sample);
        debug_assert_eq!(verdict.rigid, sample > threshold);
    }
    threshold
}

/// The built-in homogeneous examples.
pub fn catalog() -> Vec<GeometryRecord> {
    vec![
        GeometryRecord {
            name: "SU(3)".into(),
            theta_norm_sq: int(6),
            torsion_norm_sq: int(42),
            delta_theta: int(0),
            expected_scal: Some(rat(77, 6)),
        },
        GeometryRecord {
            name: "Sp(2)/T²".into(),
            theta_norm_sq: int(6),
            torsion_norm_sq: int(24),
            delta_theta: int(0),
            expected_scal: Some(rat(43, 3)),
        },
    ]
}

/// Looks a built-in example up by a forgiving key: case-insensitive, with
/// punctuation stripped, so `su3` and `sp2/t2` both resolve.
pub fn catalog_lookup(name: &str) -> Option<GeometryRecord> {
    let canon = |s: &str| -> String {
        s.replace('²', "2")
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase()
    };
    let key = canon(name);
    catalog().into_iter().find(|record| canon(&record.name) == key)
}

/// Verdict for a catalog record at a given curvature-operator eigenvalue.
pub fn record_verdict(
    record: &GeometryRecord,
    lambda_l: &Rational,
) -> Result<RigidityVerdict, RigidityError> {
    let scal = scalar_curvature(
        &record.theta_norm_sq,
        &record.torsion_norm_sq,
        &record.delta_theta,
    )?;
    Ok(rigidity_verdict(lambda_l, &scal))
}

/// Topological admissibility: `p₁² − 4·p₂ ± 8·χ = 0` with an explicit sign
/// choice.
pub fn admissibility(c: &CharClassData, sign: AdmissibilitySign) -> bool {
    let signed = match sign {
        AdmissibilitySign::Plus => c.euler,
        AdmissibilitySign::Minus => -c.euler,
    };
    c.p1_sq - 4 * c.p2 + 8 * signed == 0
}

/// Parses the catalog file format: one record per line,
/// `name theta_sq torsion_sq delta_theta [expected_scal]`, rationals as
/// `p/q`. Blank lines and `#` comments are ignored.
pub fn parse_catalog(text: &str) -> Result<Vec<GeometryRecord>, CatalogParseError> {
    let err = |line: usize, message: String| CatalogParseError { line, message };
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 && fields.len() != 5 {
            return Err(err(
                line_no,
                format!("expected 4 or 5 fields, found {}", fields.len()),
            ));
        }
        let number = |s: &str| {
            parse_rational(s).ok_or_else(|| err(line_no, format!("bad rational `{s}`")))
        };
        let record = GeometryRecord {
            name: fields[0].to_string(),
            theta_norm_sq: number(fields[1])?,
            torsion_norm_sq: number(fields[2])?,
            delta_theta: number(fields[3])?,
            expected_scal: fields.get(4).map(|s| number(s)).transpose()?,
        };
        for norm in [&record.theta_norm_sq, &record.torsion_norm_sq] {
            if norm < &Rational::zero() {
                return Err(err(line_no, format!("negative squared norm `{norm}`")));
            }
        }
        records.push(record);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn curvature_of_the_catalog_examples() {
        assert_eq!(
            scalar_curvature(&int(6), &int(42), &int(0)).unwrap(),
            rat(77, 6)
        );
        assert_eq!(
            scalar_curvature(&int(6), &int(24), &int(0)).unwrap(),
            rat(43, 3)
        );
        assert_eq!(scalar_curvature(&int(0), &int(0), &int(0)).unwrap(), int(0));
        assert!(matches!(
            scalar_curvature(&int(-1), &int(0), &int(0)),
            Err(RigidityError::NegativeNorm(_))
        ));
    }

    #[test]
    fn exact_coefficients_by_finite_differences() {
        let base = scalar_curvature(&int(3), &int(5), &int(2)).unwrap();
        assert_eq!(
            scalar_curvature(&int(4), &int(5), &int(2)).unwrap() - &base,
            rat(49, 18)
        );
        assert_eq!(
            scalar_curvature(&int(3), &int(6), &int(2)).unwrap() - &base,
            rat(-1, 12)
        );
        assert_eq!(
            scalar_curvature(&int(3), &int(5), &int(3)).unwrap() - &base,
            rat(7, 2)
        );
    }

    #[test]
    fn verdict_examples() {
        assert!(!rigidity_verdict(&int(0), &rat(77, 6)).rigid);
        assert!(rigidity_verdict(&int(0), &int(40)).rigid);
        assert!(rigidity_verdict(&int(10), &int(0)).rigid);
        let boundary = rigidity_verdict(&int(0), &int(36));
        assert!(!boundary.rigid);
        assert_eq!(boundary.margin, int(0));
        assert!(rigidity_verdict(&int(0), &int(37)).rigid);
    }

    #[test]
    fn threshold_is_36() {
        assert_eq!(flat_instanton_threshold(), int(36));
    }

    #[test]
    fn catalog_verdicts_and_margins() {
        let records = catalog();
        assert_eq!(records.len(), 2);
        let su3 = record_verdict(&records[0], &int(0)).unwrap();
        assert_eq!(su3.scal, rat(77, 6));
        assert_eq!(su3.threshold, rat(139, 24));
        assert_eq!(su3.margin, rat(-139, 24));
        assert!(!su3.rigid);
        let sp2 = record_verdict(&records[1], &int(0)).unwrap();
        assert_eq!(sp2.scal, rat(43, 3));
        assert_eq!(sp2.threshold, rat(65, 12));
        assert_eq!(sp2.margin, rat(-65, 12));
        assert!(!sp2.rigid);
        for record in &records {
            let computed = scalar_curvature(
                &record.theta_norm_sq,
                &record.torsion_norm_sq,
                &record.delta_theta,
            )
            .unwrap();
            assert_eq!(Some(computed), record.expected_scal);
        }
    }

    #[test]
    fn catalog_lookup_is_forgiving() {
        assert_eq!(catalog_lookup("su3").unwrap().name, "SU(3)");
        assert_eq!(catalog_lookup("SU(3)").unwrap().name, "SU(3)");
        assert_eq!(catalog_lookup("sp2t2").unwrap().name, "Sp(2)/T²");
        assert_eq!(catalog_lookup("Sp(2)/T2").unwrap().name, "Sp(2)/T²");
        assert!(catalog_lookup("g2").is_none());
    }

    #[test]
    fn admissibility_arithmetic() {
        let check = |p1_sq, p2, euler, sign| {
            admissibility(&CharClassData { p1_sq, p2, euler }, sign)
        };
        assert!(check(0, 0, 0, AdmissibilitySign::Plus));
        assert!(check(4, 1, 0, AdmissibilitySign::Plus));
        assert!(!check(1, 1, 1, AdmissibilitySign::Plus));
        assert!(check(8, 0, -1, AdmissibilitySign::Plus));
        assert!(check(8, 0, 1, AdmissibilitySign::Minus));
    }

    #[test]
    fn catalog_file_round_trip() {
        let text = "\
# name theta2 t2 dtheta [expected]
su3-copy 6 42 0 77/6
bare 1/2 3/4 -2
";
        let records = parse_catalog(text).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].expected_scal, Some(rat(77, 6)));
        assert_eq!(records[1].theta_norm_sq, rat(1, 2));
        assert_eq!(records[1].expected_scal, None);
        let err = parse_catalog("bad 1 2\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_catalog("neg -1 2 0\n").unwrap_err();
        assert_eq!(err.line, 1);
    }

    proptest! {
        #[test]
        fn verdict_is_monotone(
            l1 in -40i64..=40, dl in 0i64..=20,
            s1 in -40i64..=40, ds in 0i64..=20,
        ) {
            let low = rigidity_verdict(&int(l1), &int(s1));
            let high = rigidity_verdict(&(int(l1) + int(dl)), &(int(s1) + int(ds)));
            // increasing either input never flips rigid → non-rigid
            prop_assert!(!(low.rigid && !high.rigid));
        }

        #[test]
        fn flat_verdict_matches_threshold(n in -200i64..=200, d in 1i64..=8) {
            let s = rat(n, d) + int(30);
            let verdict = rigidity_verdict(&int(0), &s);
            prop_assert_eq!(verdict.rigid, s > int(36));
        }
    }
}
