//! Cartan matrix of the line bundle sequence, its quadratic form, and the
//! exact definiteness classification, with an independent sign-grid oracle.

use crate::chain::Chain;
use crate::cohomology::CohTable;
use crate::linalg::RatMatrix;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EulerError {
    #[error("vector length {got} does not match matrix size {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cohomological Cartan matrix is not unit upper triangular at ({i}, {j})")]
    NotUnitUpperTriangular { i: usize, j: usize },
}

/// Unit-upper-triangular matrix of Euler characteristics
/// `chi(E_i, E_j) = sum_k (-1)^k dim Ext^k(E_i, E_j)`, 0-based in the
/// sequence indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Matrix size `t + 1`.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            self.entries[i][i] == 1 && (0..i).all(|j| self.entries[i][j] == 0)
        })
    }

    /// `c_ik = c_ij + c_jk` for all `i < j < k`; a consequence of the closed
    /// form, so testable on any matrix claiming to be one.
    pub fn is_additive(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.at(i, k) != self.at(i, j) + self.at(j, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The symmetrised integer matrix `G = C + C^T`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|j| self.at(i, j) + self.at(j, i)).collect()).collect()
    }
}

/// Closed form: entry `(k, l)` with `k < l` is the sum of `b_m = C_m^2 + 2`
/// over the divisor window of the pair, `sum_{m = t-l+1}^{t-k} b_m`.
pub fn cartan_closed_form(chain: &Chain) -> CartanMatrix {
    let t = chain.t();
    let b = chain.b_values();
    let n = t + 1;
    let entries = (0..n)
        .map(|k| {
            (0..n)
                .map(|l| {
                    use std::cmp::Ordering::*;
                    match k.cmp(&l) {
                        Equal => 1,
                        Greater => 0,
                        Less => (t - l + 1..=t - k).map(|m| b[m - 1]).sum(),
                    }
                })
                .collect()
        })
        .collect();
    CartanMatrix { entries }
}

/// Alternating sum route: entry `(i, j)` is `hom - ext1 + ext2` from the
/// cohomological table.
pub fn cartan_from_cohomology(table: &CohTable) -> Result<CartanMatrix, EulerError> {
    let n = table.t + 1;
    let entries: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| table.hom[i][j] as i64 - table.ext1[i][j] as i64 + table.ext2[i][j] as i64)
                .collect()
        })
        .collect();
    let matrix = CartanMatrix { entries };
    if !matrix.is_unit_upper_triangular() {
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { 1 } else if i > j { 0 } else { continue };
                if matrix.at(i, j) != expected {
                    return Err(EulerError::NotUnitUpperTriangular { i, j });
                }
            }
        }
    }
    Ok(matrix)
}

/// `q(x) = sum x_i^2 + sum_{i<j} c_ij x_i x_j`.
pub fn quadratic_form_value(matrix: &CartanMatrix, x: &[i64]) -> Result<i64, EulerError> {
    let n = matrix.n();
    if x.len() != n {
        return Err(EulerError::DimensionMismatch { expected: n, got: x.len() });
    }
    let mut value = 0;
    for i in 0..n {
        value += x[i] * x[i];
        for j in i + 1..n {
            value += matrix.at(i, j) * x[i] * x[j];
        }
    }
    Ok(value)
}

/// The Euler pairing is symmetric exactly when the strictly-upper part
/// vanishes, since the strictly-lower part is identically zero.
pub fn is_symmetric(matrix: &CartanMatrix) -> bool {
    let n = matrix.n();
    (0..n).all(|i| (i + 1..n).all(|j| matrix.at(i, j) == 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefinitenessClass {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

impl std::fmt::Display for DefinitenessClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DefinitenessClass::PositiveDefinite => "positive_definite",
            DefinitenessClass::PositiveSemidefinite => "positive_semidefinite",
            DefinitenessClass::Indefinite => "indefinite",
        };
        f.write_str(s)
    }
}

/// Exact classification of `q(x) = x^T C x` through `G = C + C^T` (the
/// factor 2 does not change the class, and `G` stays integral).
///
/// Definite: all leading principal minors positive. Semidefinite: every
/// principal minor, over all index subsets, nonnegative — leading minors
/// alone misclassify semidefinite matrices with zero pivots.
pub fn classify_definiteness(matrix: &CartanMatrix) -> DefinitenessClass {
    let g = matrix.symmetrized();
    let n = matrix.n();

    let leading_positive = (1..=n).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        principal_minor(&g, &idx).is_positive()
    });
    if leading_positive {
        return DefinitenessClass::PositiveDefinite;
    }

    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if principal_minor(&g, &idx).is_negative() {
            return DefinitenessClass::Indefinite;
        }
    }
    DefinitenessClass::PositiveSemidefinite
}

fn principal_minor(g: &[Vec<i64>], idx: &[usize]) -> num_rational::BigRational {
    let sub: Vec<Vec<i64>> =
        idx.iter().map(|&r| idx.iter().map(|&c| g[r][c]).collect()).collect();
    RatMatrix::from_int_rows(&sub).determinant()
}

/// The proposition's predicate: definite exactly for all-`(-2)` chains and
/// for a single `(-3)` among `(-2)`s. Used to surface disagreements with the
/// computed class as findings, never to override it.
pub fn paper_predicts_definite(chain: &Chain) -> bool {
    let minus3 = chain.self_intersections().iter().filter(|&&c| c == -3).count();
    let minus2 = chain.self_intersections().iter().filter(|&&c| c == -2).count();
    let all_counted = minus3 + minus2 == chain.t();
    all_counted && minus3 <= 1
}

/// Outcome of evaluating the quadratic form on the full integer grid
/// `\{-radius, ..., radius\}^{t+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridScan {
    pub radius: i64,
    pub negative_witness: Option<Vec<i64>>,
    pub zero_witness: Option<Vec<i64>>,
    pub positive_witness: Option<Vec<i64>>,
}

impl GridScan {
    /// Whether the scan is consistent with a claimed class: a definite form
    /// must be positive at every nonzero grid point, a semidefinite one
    /// nonnegative with an actual nonzero zero on the grid, an indefinite
    /// one must show both signs.
    pub fn agrees_with(&self, class: DefinitenessClass) -> bool {
        match class {
            DefinitenessClass::PositiveDefinite => {
                self.negative_witness.is_none() && self.zero_witness.is_none()
            }
            DefinitenessClass::PositiveSemidefinite => {
                self.negative_witness.is_none() && self.zero_witness.is_some()
            }
            DefinitenessClass::Indefinite => {
                self.negative_witness.is_some() && self.positive_witness.is_some()
            }
        }
    }
}

/// Exhaustive sign scan of the quadratic form on the grid, with incremental
/// evaluation of the partial linear terms along the coordinate recursion.
pub fn grid_scan(matrix: &CartanMatrix, radius: i64) -> GridScan {
    let n = matrix.n();
    let mut scan = GridScan {
        radius,
        negative_witness: None,
        zero_witness: None,
        positive_witness: None,
    };
    let mut linear = vec![0i64; n];
    let mut point = vec![0i64; n];
    scan_rec(matrix, radius, 0, 0, &mut linear, &mut point, &mut scan);
    scan
}

fn scan_rec(
    matrix: &CartanMatrix,
    radius: i64,
    depth: usize,
    partial: i64,
    linear: &mut [i64],
    point: &mut Vec<i64>,
    scan: &mut GridScan,
) {
    let n = matrix.n();
    for x in -radius..=radius {
        point[depth] = x;
        let value = partial + x * x + x * linear[depth];
        if depth + 1 == n {
            if point.iter().all(|&c| c == 0) {
                continue;
            }
            let slot = if value < 0 {
                &mut scan.negative_witness
            } else if value == 0 {
                &mut scan.zero_witness
            } else {
                &mut scan.positive_witness
            };
            if slot.is_none() {
                *slot = Some(point.clone());
            }
        } else {
            for j in depth + 1..n {
                linear[j] += matrix.at(depth, j) * x;
            }
            scan_rec(matrix, radius, depth + 1, value, linear, point, scan);
            for j in depth + 1..n {
                linear[j] -= matrix.at(depth, j) * x;
            }
        }
    }
    point[depth] = 0;
}
