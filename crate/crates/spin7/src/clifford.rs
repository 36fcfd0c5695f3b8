//! The real Clifford algebra of Euclidean eight-space on 16-component
//! spinors.
//!
//! Generators are built by iterated 2×2 tensor doubling from the real blocks
//!
//! ```text
//! S = [0 1; 1 0]   T = [1 0; 0 -1]   E = [0 -1; 1 0]
//! ```
//!
//! over four tensor slots. With `x_j = T^(j-1) ⊗ S ⊗ I^(4-j)` and
//! `y_j = T^(j-1) ⊗ E ⊗ I^(4-j)`, the generator table is
//!
//! ```text
//! γ_1..γ_4 = x_1..x_4
//! γ_5..γ_8 = P·y_1..P·y_4   with   P = y_1 y_2 y_3 y_4
//! ```
//!
//! Each γ_a is a symmetric signed permutation matrix with entries in
//! {-1, 0, +1} and squares to `+I` (the Riemannian positive convention; a
//! real symmetric representation exists only for this sign in eight
//! dimensions). The table is fixed so every derived quantity downstream —
//! the invariant spinor, its eigenvalue, every pinned sign — is reproducible
//! bit for bit.

use crate::form::KForm;
use crate::linalg::{rank, RatMatrix, RatVector};
use crate::rational::Rational;

/// Dimension of the real spinor space.
pub const SPINOR_DIM: usize = 16;

/// An exact endomorphism of the 16-dimensional spinor space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorEndo {
    matrix: RatMatrix,
}

impl SpinorEndo {
    pub fn new(matrix: RatMatrix) -> Self {
        assert_eq!(
            (matrix.rows(), matrix.cols()),
            (SPINOR_DIM, SPINOR_DIM),
            "spinor endomorphisms are 16×16"
        );
        SpinorEndo { matrix }
    }

    pub fn identity() -> Self {
        SpinorEndo::new(RatMatrix::identity(SPINOR_DIM))
    }

    pub fn zero() -> Self {
        SpinorEndo::new(RatMatrix::zeros(SPINOR_DIM, SPINOR_DIM))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn mul(&self, other: &SpinorEndo) -> SpinorEndo {
        SpinorEndo::new(self.matrix.mul(&other.matrix))
    }

    pub fn add(&self, other: &SpinorEndo) -> SpinorEndo {
        SpinorEndo::new(self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &SpinorEndo) -> SpinorEndo {
        SpinorEndo::new(self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, factor: &Rational) -> SpinorEndo {
        SpinorEndo::new(self.matrix.scale(factor))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }

    pub fn commutator(&self, other: &SpinorEndo) -> SpinorEndo {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &SpinorEndo) -> SpinorEndo {
        self.mul(other).add(&other.mul(self))
    }

    pub fn apply(&self, spinor: &Spinor) -> Spinor {
        Spinor::new(self.matrix.mul_vec(&spinor.coords))
    }
}

/// An element of the 16-dimensional real spinor space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spinor {
    coords: RatVector,
}

impl Spinor {
    pub fn new(coords: RatVector) -> Self {
        assert_eq!(coords.len(), SPINOR_DIM, "spinors have 16 coordinates");
        Spinor { coords }
    }

    pub fn zero() -> Self {
        Spinor::new(RatVector::zeros(SPINOR_DIM))
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Spinor {
        Spinor::new(self.coords.scale(factor))
    }

    pub fn add(&self, other: &Spinor) -> Spinor {
        Spinor::new(self.coords.add(&other.coords))
    }

    pub fn sub(&self, other: &Spinor) -> Spinor {
        Spinor::new(self.coords.sub(&other.coords))
    }

    pub fn norm_sq(&self) -> Rational {
        self.coords.norm_sq()
    }
}

/// The fixed real representation: eight generators plus the chirality
/// element `γ_9 = γ_1 ⋯ γ_8`. `square_sign` records the Clifford convention
/// `γ_a² = square_sign · I`.
#[derive(Debug, Clone)]
pub struct GammaRep {
    generators: Vec<SpinorEndo>,
    chirality: SpinorEndo,
    pub square_sign: i8,
    // products γ_a γ_b for a < b, filled on first use; two-form actions are
    // the hot path of the instanton checks
    pair_cache: std::sync::OnceLock<Vec<SpinorEndo>>,
}

impl GammaRep {
    /// Generator `γ_a` for `a` in 1..=8.
    pub fn gamma(&self, a: u8) -> &SpinorEndo {
        assert!((1..=8).contains(&a), "generator index out of range");
        &self.generators[a as usize - 1]
    }

    pub fn generators(&self) -> &[SpinorEndo] {
        &self.generators
    }

    /// The volume element `γ_9`.
    pub fn chirality(&self) -> &SpinorEndo {
        &self.chirality
    }

    fn pair(&self, a: u8, b: u8) -> &SpinorEndo {
        debug_assert!(a < b);
        let cache = self.pair_cache.get_or_init(|| {
            let mut pairs = Vec::with_capacity(28);
            for i in 1..=8u8 {
                for j in (i + 1)..=8u8 {
                    pairs.push(self.gamma(i).mul(self.gamma(j)));
                }
            }
            pairs
        });
        let i = a as usize - 1;
        let j = b as usize - 1;
        // position of (i, j) in the upper triangle, row-major
        &cache[i * 8 - i * (i + 1) / 2 + (j - i - 1)]
    }

    /// Product `γ_{i1} ⋯ γ_{ik}` for a strictly increasing tuple; the empty
    /// tuple gives the identity.
    pub fn blade_action(&self, indices: &[u8]) -> SpinorEndo {
        match indices {
            [] => SpinorEndo::identity(),
            [a] => self.gamma(*a).clone(),
            [a, b] => self.pair(*a, *b).clone(),
            _ => {
                let mut out = self.pair(indices[0], indices[1]).clone();
                let mut rest = &indices[2..];
                while rest.len() >= 2 {
                    out = out.mul(self.pair(rest[0], rest[1]));
                    rest = &rest[2..];
                }
                if let [last] = rest {
                    out = out.mul(self.gamma(*last));
                }
                out
            }
        }
    }
}

// 2×2 integer blocks.
type Block = [[i64; 2]; 2];
const BLOCK_I: Block = [[1, 0], [0, 1]];
const BLOCK_S: Block = [[0, 1], [1, 0]];
const BLOCK_T: Block = [[1, 0], [0, -1]];
const BLOCK_E: Block = [[0, -1], [1, 0]];

fn kron4(blocks: [Block; 4]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; 16]; 16];
    for r in 0..16 {
        for c in 0..16 {
            let mut v = 1i64;
            for (slot, b) in blocks.iter().enumerate() {
                let shift = 3 - slot;
                let br = (r >> shift) & 1;
                let bc = (c >> shift) & 1;
                v *= b[br][bc];
                if v == 0 {
                    break;
                }
            }
            out[r][c] = v;
        }
    }
    out
}

fn int_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for r in 0..n {
        for k in 0..n {
            if a[r][k] == 0 {
                continue;
            }
            for c in 0..n {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

/// Builds the fixed representation from the generator table in the module
/// docs. Deterministic: two calls produce identical matrices.
pub fn build_gamma_rep() -> GammaRep {
    let slot = |j: usize, middle: Block| -> [Block; 4] {
        let mut blocks = [BLOCK_I; 4];
        for b in blocks.iter_mut().take(j) {
            *b = BLOCK_T;
        }
        blocks[j] = middle;
        blocks
    };
    let x: Vec<Vec<Vec<i64>>> = (0..4).map(|j| kron4(slot(j, BLOCK_S))).collect();
    let y: Vec<Vec<Vec<i64>>> = (0..4).map(|j| kron4(slot(j, BLOCK_E))).collect();
    let parity = y
        .iter()
        .skip(1)
        .fold(y[0].clone(), |acc, m| int_mul(&acc, m));
    let mut generators: Vec<Vec<Vec<i64>>> = x;
    for yj in &y {
        generators.push(int_mul(&parity, yj));
    }
    let chirality = generators
        .iter()
        .skip(1)
        .fold(generators[0].clone(), |acc, m| int_mul(&acc, m));
    GammaRep {
        generators: generators
            .into_iter()
            .map(|m| SpinorEndo::new(RatMatrix::from_i64_rows(&m)))
            .collect(),
        chirality: SpinorEndo::new(RatMatrix::from_i64_rows(&chirality)),
        square_sign: 1,
        pair_cache: std::sync::OnceLock::new(),
    }
}

/// Clifford action of an exterior form: the sum over its terms of
/// `coefficient · γ_{i1} ⋯ γ_{ik}`, linear in the form. A grade-0 form acts
/// as a multiple of the identity.
pub fn clifford_action(omega: &KForm, rep: &GammaRep) -> SpinorEndo {
    let mut out = SpinorEndo::zero();
    for (tuple, coeff) in omega.terms() {
        out = out.add(&rep.blade_action(tuple).scale(coeff));
    }
    out
}

/// `clifford_action(omega, rep).apply(spinor)` without materializing the
/// endomorphism; the per-blade matrix–vector products skip the zero entries
/// of the signed permutation blades.
pub fn clifford_apply(omega: &KForm, rep: &GammaRep, spinor: &Spinor) -> Spinor {
    let mut out = Spinor::zero();
    for (tuple, coeff) in omega.terms() {
        out = out.add(&rep.blade_action(tuple).apply(spinor).scale(coeff));
    }
    out
}

/// The half-spinor projectors `P± = (I ± γ_9)/2`, each of rank 8.
pub fn chirality_projectors(rep: &GammaRep) -> (SpinorEndo, SpinorEndo) {
    let half = crate::rational::rat(1, 2);
    let id = SpinorEndo::identity();
    let plus = id.add(&rep.chirality).scale(&half);
    let minus = id.sub(&rep.chirality).scale(&half);
    (plus, minus)
}

/// Rank of an endomorphism, computed exactly.
pub fn endo_rank(e: &SpinorEndo) -> usize {
    rank(e.matrix())
}
