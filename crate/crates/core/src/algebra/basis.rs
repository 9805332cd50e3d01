//! Graded path basis of a path algebra modulo homogeneous relations.
//!
//! The degree-`l` piece of the quotient is built from the degree-`l-1`
//! piece: its spanning symbols are `b ⊗ a` for `b` a basis class and `a` a
//! composable arrow, and the relation subspace is spanned by the right-end
//! embeddings `b'' · r` with `b''` a basis class of degree `l - |r|`
//! (left-extensions of lower-degree relations already vanish in these
//! coordinates). Exact row reduction per (source, target) slot picks the
//! residue basis and records how every killed symbol rewrites, which gives
//! the multiplication-by-generators table; reducing an arbitrary path is a
//! left-to-right fold over that table. Once a graded piece vanishes every
//! higher one does, the quotient being generated in degree one.

use super::quiver::QuiverPresentation;
use super::AlgebraError;
use crate::linalg::{Rat, RatMatrix};
use num_traits::{One, Zero};

pub const DEFAULT_PATH_CAP: usize = 16;

/// Path-length cap, overridable through `CHAINTILT_MAX_PATHLEN`.
pub fn default_path_cap() -> usize {
    std::env::var("CHAINTILT_MAX_PATHLEN")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_PATH_CAP)
}

/// A composable word of arrows in application order (`arrows[0]` acts
/// first); the empty word is the idempotent at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn idempotent(v: usize) -> Self {
        Path { source: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, pres: &QuiverPresentation) -> usize {
        self.arrows.last().map_or(self.source, |&a| pres.arrows[a].target)
    }
}

struct BasisElem {
    path: Path,
    target: usize,
}

pub struct AlgebraBasis {
    presentation: QuiverPresentation,
    elems: Vec<BasisElem>,
    /// `mult[id][arrow]`: expansion of (basis class `id`) · arrow over the
    /// basis; empty when the product is zero.
    mult: Vec<Vec<Vec<(usize, Rat)>>>,
    /// First length whose graded piece is zero.
    stabilization: usize,
    graded_dims: Vec<usize>,
}

impl std::fmt::Debug for AlgebraBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraBasis")
            .field("vertices", &self.presentation.vertices)
            .field("dimension", &self.dimension())
            .field("graded_dims", &self.graded_dims)
            .finish()
    }
}

impl AlgebraBasis {
    /// Build the graded basis, stopping at the first empty graded piece.
    pub fn build(presentation: QuiverPresentation, cap: usize) -> Result<Self, AlgebraError> {
        let nv = presentation.vertices;
        let n_arrows = presentation.arrows.len();

        let mut elems: Vec<BasisElem> = (0..nv)
            .map(|v| BasisElem { path: Path::idempotent(v), target: v })
            .collect();
        let mut mult: Vec<Vec<Vec<(usize, Rat)>>> = Vec::new();
        let mut graded_dims = vec![nv];
        // Ids of the previous layer's basis, for symbol generation.
        let mut prev_layer: Vec<usize> = (0..nv).collect();
        let mut layer_start_of: Vec<usize> = vec![0]; // first id of each layer

        let mut stabilization = None;
        for len in 1..=cap {
            // Symbols (b, a), grouped by (source of b, target of a).
            let mut slots: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv * nv];
            for &b in &prev_layer {
                for a in presentation.arrows_from(elems[b].target) {
                    let s = elems[b].path.source;
                    let t = presentation.arrows[a].target;
                    slots[s * nv + t].push((b, a));
                }
            }
            for slot in slots.iter_mut() {
                slot.sort();
            }

            // Extend the table so ids of the previous layer have rows.
            while mult.len() < elems.len() {
                mult.push(vec![Vec::new(); n_arrows]);
            }

            let mut new_ids_total = 0;
            let mut pending: Vec<(usize, usize, usize)> = Vec::new(); // (b, a, id)
            for s in 0..nv {
                for t in 0..nv {
                    let symbols = &slots[s * nv + t];
                    if symbols.is_empty() {
                        continue;
                    }
                    let index: std::collections::HashMap<(usize, usize), usize> =
                        symbols.iter().enumerate().map(|(i, &sym)| (sym, i)).collect();

                    // Right-end relation embeddings b'' · r.
                    let mut rows: Vec<Vec<Rat>> = Vec::new();
                    for rel in &presentation.relations {
                        let rel_len = rel.terms[0].arrows.len();
                        if rel_len > len {
                            continue;
                        }
                        let (x, y) = presentation
                            .path_endpoints(&rel.terms[0].arrows)
                            .expect("validated");
                        if y != t {
                            continue;
                        }
                        let stub_layer = len - rel_len;
                        let stubs = &elems[layer_start_of[stub_layer]
                            ..layer_start_of.get(stub_layer + 1).copied().unwrap_or(elems.len())];
                        let stub_ids = layer_start_of[stub_layer]
                            ..layer_start_of.get(stub_layer + 1).copied().unwrap_or(elems.len());
                        for (stub, id) in stubs.iter().zip(stub_ids) {
                            if stub.path.source != s || stub.target != x {
                                continue;
                            }
                            let mut row = vec![Rat::zero(); symbols.len()];
                            let mut nontrivial = false;
                            for term in &rel.terms {
                                // Fold all but the last arrow through the table.
                                let (word, tail) = term.arrows.split_at(term.arrows.len() - 1);
                                let mut expansion: Vec<(usize, Rat)> = vec![(id, Rat::one())];
                                for &arrow in word {
                                    expansion = fold_arrow(&mult, &expansion, arrow);
                                }
                                let last = tail[0];
                                for (b, coeff) in expansion {
                                    let col = index[&(b, last)];
                                    row[col] = &row[col] + &(&coeff * &term.coeff);
                                    nontrivial = true;
                                }
                            }
                            if nontrivial {
                                rows.push(row);
                            }
                        }
                    }

                    let mut rref = if rows.is_empty() {
                        RatMatrix::zeros(0, symbols.len())
                    } else {
                        RatMatrix::from_rows(rows)
                    };
                    let pivots = rref.rref();
                    let mut pivot_row = vec![None; symbols.len()];
                    for (row, &col) in pivots.iter().enumerate() {
                        pivot_row[col] = Some(row);
                    }

                    // Survivors become basis classes.
                    let mut ids = vec![usize::MAX; symbols.len()];
                    for (i, &(b, a)) in symbols.iter().enumerate() {
                        if pivot_row[i].is_some() {
                            continue;
                        }
                        let id = elems.len();
                        let mut word = elems[b].path.arrows.clone();
                        word.push(a);
                        elems.push(BasisElem {
                            path: Path { source: s, arrows: word },
                            target: t,
                        });
                        ids[i] = id;
                        pending.push((b, a, id));
                        new_ids_total += 1;
                    }
                    // Killed symbols rewrite over the survivors.
                    for (i, &(b, a)) in symbols.iter().enumerate() {
                        let expansion: Vec<(usize, Rat)> = match pivot_row[i] {
                            None => vec![(ids[i], Rat::one())],
                            Some(row) => (0..symbols.len())
                                .filter(|&c| pivot_row[c].is_none())
                                .filter_map(|c| {
                                    let coeff = rref.at(row, c);
                                    if coeff.is_zero() {
                                        None
                                    } else {
                                        Some((ids[c], -coeff.clone()))
                                    }
                                })
                                .collect(),
                        };
                        mult[b][a] = expansion;
                    }
                }
            }

            if new_ids_total == 0 {
                stabilization = Some(len);
                break;
            }
            graded_dims.push(new_ids_total);
            layer_start_of.push(elems.len() - new_ids_total);
            prev_layer = (elems.len() - new_ids_total..elems.len()).collect();
            let _ = pending;
        }
        let Some(stabilization) = stabilization else {
            return Err(AlgebraError::NotFiniteDimensional { cap });
        };
        while mult.len() < elems.len() {
            mult.push(vec![Vec::new(); n_arrows]);
        }

        Ok(AlgebraBasis { presentation, elems, mult, stabilization, graded_dims })
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn vertices(&self) -> usize {
        self.presentation.vertices
    }

    pub fn dimension(&self) -> usize {
        self.elems.len()
    }

    pub fn graded_dims(&self) -> &[usize] {
        &self.graded_dims
    }

    /// First length with empty graded piece.
    pub fn stabilization_length(&self) -> usize {
        self.stabilization
    }

    pub fn basis_path(&self, id: usize) -> &Path {
        &self.elems[id].path
    }

    /// Global ids of basis classes whose representative starts at `v`, in id
    /// order (by length, then slot).
    pub fn basis_ids_from(&self, v: usize) -> Vec<usize> {
        (0..self.elems.len()).filter(|&id| self.elems[id].path.source == v).collect()
    }

    /// Basis layout of the projective at `v`: global ids grouped per target
    /// vertex, in the order the corresponding `Module` uses them.
    pub fn projective_layout(&self, v: usize) -> Vec<Vec<usize>> {
        let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.vertices()];
        for id in self.basis_ids_from(v) {
            by_vertex[self.elems[id].target].push(id);
        }
        by_vertex
    }

    /// Expand the residue class of an arrow word over the basis. Empty
    /// output means the class is zero.
    pub fn reduce_word(&self, source: usize, word: &[usize]) -> Vec<(usize, Rat)> {
        let mut expansion: Vec<(usize, Rat)> = vec![(source, Rat::one())]; // idempotent id = vertex
        let mut at = source;
        for &a in word {
            debug_assert_eq!(self.presentation.arrows[a].source, at, "word not composable");
            at = self.presentation.arrows[a].target;
            if expansion.is_empty() {
                return expansion;
            }
            expansion = fold_arrow(&self.mult, &expansion, a);
        }
        expansion
    }

    /// Product of two basis classes, `first` acting before `then`; empty
    /// expansion when the classes are not composable or the product is zero.
    pub fn multiply_basis(&self, first: usize, then: usize) -> Vec<(usize, Rat)> {
        let p = &self.elems[first];
        let q = &self.elems[then];
        if p.target != q.path.source {
            return Vec::new();
        }
        let mut expansion: Vec<(usize, Rat)> = vec![(first, Rat::one())];
        for &a in &q.path.arrows {
            if expansion.is_empty() {
                break;
            }
            expansion = fold_arrow(&self.mult, &expansion, a);
        }
        expansion
    }
}

fn fold_arrow(
    mult: &[Vec<Vec<(usize, Rat)>>],
    expansion: &[(usize, Rat)],
    arrow: usize,
) -> Vec<(usize, Rat)> {
    let mut acc: std::collections::BTreeMap<usize, Rat> = std::collections::BTreeMap::new();
    for (b, coeff) in expansion {
        for (id, c) in &mult[*b][arrow] {
            let entry = acc.entry(*id).or_insert_with(Rat::zero);
            *entry = &*entry + &(coeff * c);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quiver::{Arrow, Relation, RelationTerm};
    use crate::linalg::rat;

    fn arrow(source: usize, target: usize, name: &str) -> Arrow {
        Arrow { source, target, name: name.into() }
    }

    #[test]
    fn two_vertices_no_arrows() {
        let pres = QuiverPresentation::new(2, vec![], vec![]).unwrap();
        let alg = AlgebraBasis::build(pres, 16).unwrap();
        assert_eq!(alg.dimension(), 2);
        assert_eq!(alg.stabilization_length(), 1);
    }

    #[test]
    fn dual_numbers_from_a_loop() {
        // One vertex, one loop x, relation x^2 = 0: basis {e, x}.
        let pres = QuiverPresentation::new(
            1,
            vec![arrow(0, 0, "x")],
            vec![Relation { terms: vec![RelationTerm { coeff: rat(1), arrows: vec![0, 0] }] }],
        )
        .unwrap();
        let alg = AlgebraBasis::build(pres, 16).unwrap();
        assert_eq!(alg.dimension(), 2);
        assert_eq!(alg.graded_dims(), &[1, 1]);
    }

    #[test]
    fn polynomial_ring_is_not_finite_dimensional() {
        let pres = QuiverPresentation::new(1, vec![arrow(0, 0, "x")], vec![]).unwrap();
        assert_eq!(
            AlgebraBasis::build(pres, 8).unwrap_err(),
            AlgebraError::NotFiniteDimensional { cap: 8 }
        );
    }

    #[test]
    fn zero_relation_two_vertex_presentation() {
        // alpha: 0 -> 1, beta: 1 -> 0, relation "alpha then beta" = 0.
        let pres = QuiverPresentation::new(
            2,
            vec![arrow(0, 1, "alpha"), arrow(1, 0, "beta")],
            vec![Relation { terms: vec![RelationTerm { coeff: rat(1), arrows: vec![0, 1] }] }],
        )
        .unwrap();
        let alg = AlgebraBasis::build(pres, 16).unwrap();
        // {e0, e1, alpha, beta, alpha∘beta}
        assert_eq!(alg.dimension(), 5);
        assert_eq!(alg.graded_dims(), &[2, 2, 1]);
        assert_eq!(alg.stabilization_length(), 3);

        // The killed loop at 0 reduces to zero, the surviving loop at 1 does not.
        assert!(alg.reduce_word(0, &[0, 1]).is_empty());
        assert_eq!(alg.reduce_word(1, &[1, 0]).len(), 1);
        // Longer words through the relation vanish.
        assert!(alg.reduce_word(1, &[1, 0, 1]).is_empty());
    }

    #[test]
    fn commutativity_relation_identifies_loops() {
        // 0 <-> 1 <-> 2 with the two loops at vertex 1 identified and the
        // loop at vertex 0 killed.
        let arrows = vec![
            arrow(0, 1, "a1"),
            arrow(1, 0, "b1"),
            arrow(1, 2, "a2"),
            arrow(2, 1, "b2"),
        ];
        let relations = vec![
            Relation { terms: vec![RelationTerm { coeff: rat(1), arrows: vec![0, 1] }] },
            Relation {
                terms: vec![
                    RelationTerm { coeff: rat(1), arrows: vec![1, 0] },
                    RelationTerm { coeff: rat(-1), arrows: vec![2, 3] },
                ],
            },
        ];
        let pres = QuiverPresentation::new(3, arrows, relations).unwrap();
        let alg = AlgebraBasis::build(pres, 16).unwrap();
        // Auslander algebra of k[T]/T^3.
        assert_eq!(alg.dimension(), 14);

        // The two loops at vertex 1 agree as residue classes.
        let left = alg.reduce_word(1, &[1, 0]);
        let right = alg.reduce_word(1, &[2, 3]);
        assert_eq!(left, right);
    }

    #[test]
    fn grading_sums_to_dimension_and_products_stay_in_basis() {
        let pres = QuiverPresentation::new(
            2,
            vec![arrow(0, 1, "alpha"), arrow(1, 0, "beta")],
            vec![Relation { terms: vec![RelationTerm { coeff: rat(1), arrows: vec![0, 1] }] }],
        )
        .unwrap();
        let alg = AlgebraBasis::build(pres, 16).unwrap();
        assert_eq!(alg.graded_dims().iter().sum::<usize>(), alg.dimension());
        for i in 0..alg.dimension() {
            for j in 0..alg.dimension() {
                for (id, _) in alg.multiply_basis(i, j) {
                    assert!(id < alg.dimension());
                }
            }
        }
    }
}
