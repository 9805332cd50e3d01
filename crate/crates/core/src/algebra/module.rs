//! Quiver representations: one exact-rational vector space per vertex and
//! one matrix per arrow, constrained by the relations.

use super::basis::AlgebraBasis;
use super::hom::ModuleHom;
use crate::linalg::{Rat, RatMatrix, SubspaceReducer};
use num_traits::One;
use std::sync::Arc;

#[derive(Clone)]
pub struct Module {
    algebra: Arc<AlgebraBasis>,
    dims: Vec<usize>,
    /// Per arrow `a`: a `dims[target] x dims[source]` matrix.
    arrows: Vec<RatMatrix>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module").field("dims", &self.dims).finish()
    }
}

impl Module {
    /// Wrap raw data as a representation; the relations are checked exactly.
    pub fn new(algebra: Arc<AlgebraBasis>, dims: Vec<usize>, arrows: Vec<RatMatrix>) -> Self {
        let pres = algebra.presentation();
        assert_eq!(dims.len(), pres.vertices);
        assert_eq!(arrows.len(), pres.arrows.len());
        for (a, m) in pres.arrows.iter().zip(&arrows) {
            assert_eq!((m.rows(), m.cols()), (dims[a.target], dims[a.source]), "arrow matrix shape");
        }
        let module = Module { algebra, dims, arrows };
        module.assert_relations();
        module
    }

    fn assert_relations(&self) {
        let pres = self.algebra.presentation();
        for rel in &pres.relations {
            let (source, target) = pres.path_endpoints(&rel.terms[0].arrows).expect("validated");
            let mut total = RatMatrix::zeros(self.dims[target], self.dims[source]);
            for term in &rel.terms {
                let m = self.word_matrix(source, &term.arrows);
                total = total.sub(&m.scale(&-term.coeff.clone()));
            }
            assert!(total.is_zero(), "relation does not evaluate to zero on module");
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        &self.algebra
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, arrow: usize) -> &RatMatrix {
        &self.arrows[arrow]
    }

    /// Matrix of an arrow word acting `source-space -> target-space`.
    pub fn word_matrix(&self, source: usize, word: &[usize]) -> RatMatrix {
        let pres = self.algebra.presentation();
        let mut at = source;
        let mut m = RatMatrix::identity(self.dims[source]);
        for &a in word {
            debug_assert_eq!(pres.arrows[a].source, at);
            m = self.arrows[a].mul(&m);
            at = pres.arrows[a].target;
        }
        m
    }

    /// Apply an arrow word to a single vector based at `source`.
    pub fn apply_word(&self, source: usize, word: &[usize], v: &[Rat]) -> Vec<Rat> {
        let mut out = v.to_vec();
        for &a in word {
            out = self.arrows[a].mul_vec(&out);
        }
        let _ = source;
        out
    }

    /// The zero representation.
    pub fn zero(algebra: Arc<AlgebraBasis>) -> Self {
        let nv = algebra.presentation().vertices;
        let arrows = algebra
            .presentation()
            .arrows
            .iter()
            .map(|_| RatMatrix::zeros(0, 0))
            .collect();
        Module { algebra, dims: vec![0; nv], arrows }
    }

    /// Simple representation concentrated at `v`.
    pub fn simple(algebra: Arc<AlgebraBasis>, v: usize) -> Self {
        let pres = algebra.presentation();
        let nv = pres.vertices;
        assert!(v < nv);
        let mut dims = vec![0; nv];
        dims[v] = 1;
        let arrows = pres
            .arrows
            .iter()
            .map(|a| RatMatrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Module::new(algebra, dims, arrows)
    }

    /// Indecomposable projective at `v`: residue classes of paths starting
    /// at `v`, arrows acting by post-composition.
    pub fn projective(algebra: Arc<AlgebraBasis>, v: usize) -> Self {
        let pres = algebra.presentation().clone();
        let by_vertex = algebra.projective_layout(v);
        let mut local: std::collections::HashMap<usize, (usize, usize)> =
            std::collections::HashMap::new();
        for (w, list) in by_vertex.iter().enumerate() {
            for (pos, &id) in list.iter().enumerate() {
                local.insert(id, (w, pos));
            }
        }
        let dims: Vec<usize> = by_vertex.iter().map(Vec::len).collect();

        let arrows = pres
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = RatMatrix::zeros(dims[a.target], dims[a.source]);
                for (col, &id) in by_vertex[a.source].iter().enumerate() {
                    let path = algebra.basis_path(id);
                    let mut word = path.arrows.clone();
                    word.push(ai);
                    for (image_id, coeff) in algebra.reduce_word(path.source, &word) {
                        let (w, row) = local[&image_id];
                        debug_assert_eq!(w, a.target);
                        m.set(row, col, coeff);
                    }
                }
                m
            })
            .collect();
        Module::new(algebra, dims, arrows)
    }

    /// Direct sum; block layout follows the argument order.
    pub fn direct_sum(parts: &[&Module]) -> Module {
        assert!(!parts.is_empty());
        let algebra = parts[0].algebra.clone();
        assert!(parts.iter().all(|m| Arc::ptr_eq(&m.algebra, &algebra)), "mixed algebras in sum");
        let nv = algebra.presentation().vertices;
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let arrows = algebra
            .presentation()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = RatMatrix::zeros(dims[a.target], dims[a.source]);
                let mut row_off = 0;
                let mut col_off = 0;
                for part in parts {
                    let block = &part.arrows[ai];
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m.set(row_off + r, col_off + c, block.at(r, c).clone());
                        }
                    }
                    row_off += part.dims[a.target];
                    col_off += part.dims[a.source];
                }
                m
            })
            .collect();
        Module::new(algebra, dims, arrows)
    }

    /// Per-vertex columns spanning the radical `sum_a image(phi_a)`.
    pub fn radical_span(&self) -> Vec<RatMatrix> {
        let pres = self.algebra.presentation();
        let nv = pres.vertices;
        (0..nv)
            .map(|v| {
                let mut span = RatMatrix::zeros(self.dims[v], 0);
                for (ai, a) in pres.arrows.iter().enumerate() {
                    if a.target == v {
                        span = span.hstack(&self.arrows[ai]);
                    }
                }
                span
            })
            .collect()
    }

    /// Submodule spanned by the given per-vertex columns, with its inclusion.
    /// The span must be closed under the arrow action.
    pub fn submodule(&self, span: &[RatMatrix]) -> (Module, ModuleHom) {
        let pres = self.algebra.presentation();
        let bases: Vec<RatMatrix> = span.iter().map(RatMatrix::column_space_basis).collect();
        let dims: Vec<usize> = bases.iter().map(RatMatrix::cols).collect();
        let arrows = pres
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let image = self.arrows[ai].mul(&bases[a.source]);
                bases[a.target]
                    .solve(&image)
                    .expect("span is not closed under the arrow action")
            })
            .collect();
        let sub = Module::new(self.algebra.clone(), dims, arrows);
        let inclusion = ModuleHom::new(&sub, self, bases);
        (sub, inclusion)
    }

    /// Quotient by the submodule spanned by the given per-vertex columns,
    /// with the projection. The span must be closed under the arrow action.
    pub fn quotient(&self, span: &[RatMatrix]) -> (Module, ModuleHom) {
        let pres = self.algebra.presentation();
        let reducers: Vec<SubspaceReducer> = span.iter().map(SubspaceReducer::new).collect();
        let projections: Vec<RatMatrix> =
            reducers.iter().map(SubspaceReducer::projection_matrix).collect();
        let sections: Vec<RatMatrix> =
            reducers.iter().map(SubspaceReducer::section_matrix).collect();
        let dims: Vec<usize> = reducers.iter().map(|r| r.free.len()).collect();
        let arrows: Vec<RatMatrix> = pres
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| projections[a.target].mul(&self.arrows[ai]).mul(&sections[a.source]))
            .collect();
        let quot = Module::new(self.algebra.clone(), dims, arrows);
        // Well-definedness: the span must map to zero in the quotient.
        for (ai, a) in pres.arrows.iter().enumerate() {
            let moved = projections[a.target].mul(&self.arrows[ai]).mul(&span[a.source]);
            assert!(moved.is_zero(), "span is not closed under the arrow action");
        }
        let projection = ModuleHom::new(self, &quot, projections);
        (quot, projection)
    }

    /// Dimension of the top `M / rad M` at each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_span()
            .iter()
            .enumerate()
            .map(|(v, span)| self.dims[v] - span.rank())
            .collect()
    }

    /// Lift of a basis of the top: per vertex, columns of `M_v` whose
    /// classes form a basis of `(M / rad M)_v`.
    pub fn top_lift(&self) -> Vec<RatMatrix> {
        self.radical_span()
            .iter()
            .enumerate()
            .map(|(v, span)| {
                let reducer = SubspaceReducer::new(span);
                let mut lift = RatMatrix::zeros(self.dims[v], reducer.free.len());
                for (j, &coord) in reducer.free.iter().enumerate() {
                    lift.set(coord, j, Rat::one());
                }
                lift
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_fixtures::t1_algebra;

    #[test]
    fn projectives_of_the_two_vertex_presentation() {
        let alg = t1_algebra();
        let p0 = Module::projective(alg.clone(), 0);
        assert_eq!(p0.dims(), &[1, 1]);
        let p1 = Module::projective(alg.clone(), 1);
        assert_eq!(p1.dims(), &[1, 2]);
    }

    #[test]
    fn projective_over_arrowless_quiver_is_simple() {
        use crate::algebra::quiver::QuiverPresentation;
        let pres = QuiverPresentation::new(3, vec![], vec![]).unwrap();
        let alg = Arc::new(AlgebraBasis::build(pres, 4).unwrap());
        for v in 0..3 {
            let p = Module::projective(alg.clone(), v);
            let s = Module::simple(alg.clone(), v);
            assert_eq!(p.dims(), s.dims());
        }
    }

    #[test]
    fn simple_dims_are_unit_vectors() {
        let alg = t1_algebra();
        assert_eq!(Module::simple(alg.clone(), 0).dims(), &[1, 0]);
        assert_eq!(Module::simple(alg.clone(), 1).dims(), &[0, 1]);
    }

    #[test]
    fn radical_and_top_of_projectives() {
        let alg = t1_algebra();
        let p1 = Module::projective(alg.clone(), 1);
        let rad = p1.radical_span();
        // rad P(1) is spanned by beta and the loop at 1.
        assert_eq!(rad[0].rank(), 1);
        assert_eq!(rad[1].rank(), 1);
        assert_eq!(p1.top_dims(), vec![0, 1]);
    }

    #[test]
    fn quotient_by_radical_is_the_simple_top() {
        let alg = t1_algebra();
        let p0 = Module::projective(alg.clone(), 0);
        let (top, _) = p0.quotient(&p0.radical_span());
        assert_eq!(top.dims(), Module::simple(alg, 0).dims());
    }

    #[test]
    fn direct_sum_dims_add() {
        let alg = t1_algebra();
        let p0 = Module::projective(alg.clone(), 0);
        let p1 = Module::projective(alg, 1);
        let sum = Module::direct_sum(&[&p0, &p1]);
        assert_eq!(sum.dims(), &[2, 3]);
    }
}
