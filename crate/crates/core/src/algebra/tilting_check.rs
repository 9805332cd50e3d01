//! The splitting criterion for exact tilting: a non-split surjection onto an
//! indecomposable summand `B` exists exactly when the images of all radical
//! maps into `B` (from the other summands, and from `rad End(B)`) fill `B`.
//!
//! This reduction to indecomposable targets relies on locality of `End(B)`:
//! a surjection onto `B` splits precisely when some component of it is an
//! isomorphism, so non-split surjections are sums of radical maps.

use super::hom::{hom_space, radical_hom};
use super::module::Module;
use super::AlgebraError;
use crate::linalg::RatMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TiltingVerdict {
    Exact,
    /// Index (into the summand list) of a summand receiving a non-split
    /// surjection from the additive closure.
    NotExact { witness: usize },
}

/// Decide whether every surjection between sums of the given pairwise
/// non-isomorphic indecomposable modules splits.
pub fn exact_tilting_check(summands: &[Module]) -> Result<TiltingVerdict, AlgebraError> {
    // Indecomposability: End/rad must be one-dimensional.
    for (index, m) in summands.iter().enumerate() {
        let end = hom_space(m, m).len();
        let rad = radical_hom(m, m).len();
        if end - rad != 1 {
            return Err(AlgebraError::NotIndecomposable { index, end_over_rad: end - rad });
        }
    }
    // Pairwise non-isomorphic is the caller's contract; equal dimension
    // vectors are the only candidates worth the certified check.
    for i in 0..summands.len() {
        for j in i + 1..summands.len() {
            if summands[i].dims() == summands[j].dims() {
                assert!(
                    !super::hom::is_isomorphic(&summands[i], &summands[j])?,
                    "summands {i} and {j} are isomorphic"
                );
            }
        }
    }

    let nv = summands[0].dims().len();
    for (b_index, b) in summands.iter().enumerate() {
        let mut spans: Vec<RatMatrix> =
            (0..nv).map(|v| RatMatrix::zeros(b.dims()[v], 0)).collect();
        for (a_index, a) in summands.iter().enumerate() {
            let maps = if a_index == b_index { radical_hom(b, b) } else { hom_space(a, b) };
            for f in maps {
                for v in 0..nv {
                    spans[v] = spans[v].hstack(&f.matrices[v]);
                }
            }
        }
        let covered = (0..nv).all(|v| spans[v].rank() == b.dims()[v]);
        if covered {
            return Ok(TiltingVerdict::NotExact { witness: b_index });
        }
    }
    Ok(TiltingVerdict::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_fixtures::t1_algebra;

    #[test]
    fn projectives_are_exact_tilting() {
        let alg = t1_algebra();
        let p0 = Module::projective(alg.clone(), 0);
        let p1 = Module::projective(alg.clone(), 1);
        assert_eq!(exact_tilting_check(&[p0, p1]).unwrap(), TiltingVerdict::Exact);
    }

    #[test]
    fn coextension_pair_fails_with_the_simple_witness() {
        let alg = t1_algebra();
        let s1 = Module::simple(alg.clone(), 1);
        let p1 = Module::projective(alg.clone(), 1);
        assert_eq!(
            exact_tilting_check(&[s1, p1]).unwrap(),
            TiltingVerdict::NotExact { witness: 0 }
        );
    }

    #[test]
    fn a_single_simple_is_exact() {
        let alg = t1_algebra();
        let s0 = Module::simple(alg.clone(), 0);
        assert_eq!(exact_tilting_check(&[s0]).unwrap(), TiltingVerdict::Exact);
    }

    #[test]
    fn decomposable_input_is_rejected() {
        let alg = t1_algebra();
        let s0 = Module::simple(alg.clone(), 0);
        let sum = Module::direct_sum(&[&s0, &s0]);
        assert!(matches!(
            exact_tilting_check(&[sum]).unwrap_err(),
            AlgebraError::NotIndecomposable { .. }
        ));
    }
}
