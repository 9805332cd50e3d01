//! Chains of negative rational curves and the divisor windows underlying
//! the Hom/Ext spaces of the attached sequence of line bundles.
//!
//! A chain is the list of self-intersection numbers `(C_1^2, ..., C_t^2)` of
//! an `A_t`-configuration of smooth rational curves. The sequence of line
//! bundles is indexed `E_0, ..., E_t` with `E_k = O(-C_1 - ... - C_{t-k})`,
//! so `E_t = O`. Hom and Ext spaces between two members reduce to cohomology
//! of a contiguous subchain, the "divisor window".

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("empty chain")]
    Empty,
    #[error("sequence index {index} out of range 0..={t}")]
    IndexOutOfRange { index: usize, t: usize },
}

/// An `A_t`-chain, recorded by its self-intersection numbers.
///
/// Any integer values are accepted at construction; restrictions such as
/// "all `C_i^2 <= -2`" are checked downstream where they matter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    self_intersections: Vec<i64>,
}

impl Chain {
    pub fn new(entries: Vec<i64>) -> Result<Self, ChainError> {
        if entries.is_empty() {
            return Err(ChainError::Empty);
        }
        Ok(Chain { self_intersections: entries })
    }

    /// Number of curves in the chain.
    pub fn t(&self) -> usize {
        self.self_intersections.len()
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_intersections
    }

    /// `C_i^2` for a 1-based curve index.
    pub fn self_intersection(&self, i: usize) -> i64 {
        self.self_intersections[i - 1]
    }

    /// `b_i = C_i^2 + 2` for every curve, in chain order.
    pub fn b_values(&self) -> Vec<i64> {
        self.self_intersections.iter().map(|c| c + 2).collect()
    }

    pub fn all_at_most(&self, bound: i64) -> bool {
        self.self_intersections.iter().all(|&c| c <= bound)
    }

    pub fn all_equal(&self, value: i64) -> bool {
        self.self_intersections.iter().all(|&c| c == value)
    }

    /// The subchain of curves carrying `Hom`/`Ext` between `E_i` and `E_j`.
    ///
    /// For sequence indices `i != j` this is the interval
    /// `[t - max(i,j) + 1, t - min(i,j)]` of curve indices; the diagonal has
    /// no divisor attached.
    pub fn divisor_window(&self, i: usize, j: usize) -> Result<Option<DivisorWindow<'_>>, ChainError> {
        let t = self.t();
        for index in [i, j] {
            if index > t {
                return Err(ChainError::IndexOutOfRange { index, t });
            }
        }
        if i == j {
            return Ok(None);
        }
        let (lo_seq, hi_seq) = (i.min(j), i.max(j));
        Ok(Some(DivisorWindow { chain: self, lo: t - hi_seq + 1, hi: t - lo_seq }))
    }
}

/// Which twist of the window's structure sheaf is being restricted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    /// `O_D(D)`: the self-intersection twist.
    SelfTwist,
    /// `O_D`: the plain structure sheaf of the subchain.
    ZeroTwist,
}

/// A contiguous, nonempty subchain `D = C_lo + ... + C_hi` (1-based, inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorWindow<'a> {
    chain: &'a Chain,
    pub lo: usize,
    pub hi: usize,
}

impl<'a> DivisorWindow<'a> {
    /// Number of curve components in the window.
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // windows are nonempty by construction
    }

    /// Self-intersection of the subchain divisor: `sum C_k^2 + 2(m-1)`.
    pub fn divisor_self_intersection(&self) -> i64 {
        let squares: i64 =
            (self.lo..=self.hi).map(|k| self.chain.self_intersection(k)).sum();
        squares + 2 * (self.len() as i64 - 1)
    }

    /// Restrict the twist to the window, one degree per component.
    ///
    /// `SelfTwist` gives `d_k = C_k^2 + #\{neighbours of C_k inside the window\}`;
    /// `ZeroTwist` gives all degrees zero.
    pub fn multidegree(&self, twist: Twist) -> LineBundleOnChain {
        let degrees = match twist {
            Twist::ZeroTwist => vec![0; self.len()],
            Twist::SelfTwist => (self.lo..=self.hi)
                .map(|k| {
                    let mut neighbours = 0;
                    if k > self.lo {
                        neighbours += 1;
                    }
                    if k < self.hi {
                        neighbours += 1;
                    }
                    self.chain.self_intersection(k) + neighbours
                })
                .collect(),
        };
        LineBundleOnChain { multidegree: degrees }
    }
}

/// A line bundle on a chain of `m` projective lines glued in `m - 1` nodes,
/// recorded by its degree on each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleOnChain {
    pub multidegree: Vec<i64>,
}

impl LineBundleOnChain {
    pub fn new(multidegree: Vec<i64>) -> Self {
        assert!(!multidegree.is_empty(), "line bundle needs at least one component");
        LineBundleOnChain { multidegree }
    }

    pub fn components(&self) -> usize {
        self.multidegree.len()
    }

    /// Euler characteristic `sum (d_k + 1) - (m - 1)`.
    pub fn euler_characteristic(&self) -> i64 {
        let m = self.components() as i64;
        self.multidegree.iter().map(|d| d + 1).sum::<i64>() - (m - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_accepts_any_values() {
        assert_eq!(Chain::new(vec![-2, -2]).unwrap().t(), 2);
        assert_eq!(Chain::new(vec![-1, -3, -1]).unwrap().t(), 3);
        assert_eq!(Chain::new(vec![]), Err(ChainError::Empty));
    }

    #[test]
    fn b_values_examples() {
        assert_eq!(Chain::new(vec![-2, -2, -2]).unwrap().b_values(), vec![0, 0, 0]);
        assert_eq!(Chain::new(vec![-3]).unwrap().b_values(), vec![-1]);
        assert_eq!(Chain::new(vec![-2, -3, -4]).unwrap().b_values(), vec![0, -1, -2]);
    }

    #[test]
    fn window_examples() {
        let chain = Chain::new(vec![-2, -2, -2]).unwrap();
        let w = chain.divisor_window(0, 3).unwrap().unwrap();
        assert_eq!((w.lo, w.hi), (1, 3));
        let w = chain.divisor_window(1, 2).unwrap().unwrap();
        assert_eq!((w.lo, w.hi), (2, 2));
        assert!(chain.divisor_window(2, 2).unwrap().is_none());
        assert!(chain.divisor_window(0, 4).is_err());
    }

    #[test]
    fn window_is_symmetric_in_its_indices() {
        let chain = Chain::new(vec![-2, -3, -4, -2]).unwrap();
        for i in 0..=4 {
            for j in 0..=4 {
                if i == j {
                    continue;
                }
                let a = chain.divisor_window(i, j).unwrap().unwrap();
                let b = chain.divisor_window(j, i).unwrap().unwrap();
                assert_eq!((a.lo, a.hi), (b.lo, b.hi));
            }
        }
    }

    #[test]
    fn multidegree_examples() {
        let single = Chain::new(vec![-2]).unwrap();
        let w = single.divisor_window(0, 1).unwrap().unwrap();
        assert_eq!(w.multidegree(Twist::SelfTwist).multidegree, vec![-2]);

        let triple = Chain::new(vec![-2, -2, -2]).unwrap();
        let w = triple.divisor_window(0, 3).unwrap().unwrap();
        assert_eq!(w.multidegree(Twist::SelfTwist).multidegree, vec![-1, 0, -1]);
        assert_eq!(w.multidegree(Twist::ZeroTwist).multidegree, vec![0, 0, 0]);
    }

    #[test]
    fn selftwist_degree_sum_is_divisor_self_intersection() {
        let chain = Chain::new(vec![-1, -2, -3, -4, -5]).unwrap();
        for i in 0..=5usize {
            for j in 0..=5usize {
                let Some(w) = chain.divisor_window(i, j).unwrap() else { continue };
                let total: i64 = w.multidegree(Twist::SelfTwist).multidegree.iter().sum();
                assert_eq!(total, w.divisor_self_intersection());
            }
        }
    }

    #[test]
    fn zerotwist_has_euler_characteristic_one() {
        let chain = Chain::new(vec![-3, -1, -2, -7]).unwrap();
        for i in 0..=4usize {
            for j in 0..=4usize {
                let Some(w) = chain.divisor_window(i, j).unwrap() else { continue };
                assert_eq!(w.multidegree(Twist::ZeroTwist).euler_characteristic(), 1);
            }
        }
    }
}
