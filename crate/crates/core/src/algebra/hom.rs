//! Homomorphisms between representations: exact Hom-space bases, radical
//! subspaces via the characteristic-zero trace pairing, and a certified
//! isomorphism test.

use super::module::Module;
use super::AlgebraError;
use crate::linalg::{Rat, RatMatrix};
use num_traits::Zero;

/// A homomorphism of representations, one matrix per vertex
/// (`target_dim x source_dim`), intertwining every arrow.
#[derive(Clone)]
pub struct ModuleHom {
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    pub matrices: Vec<RatMatrix>,
}

impl std::fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleHom")
            .field("source_dims", &self.source_dims)
            .field("target_dims", &self.target_dims)
            .finish()
    }
}

impl ModuleHom {
    pub fn new(source: &Module, target: &Module, matrices: Vec<RatMatrix>) -> Self {
        assert!(source.same_algebra(target), "hom between modules over different algebras");
        let pres = source.algebra().presentation();
        assert_eq!(matrices.len(), pres.vertices);
        for v in 0..pres.vertices {
            assert_eq!(
                (matrices[v].rows(), matrices[v].cols()),
                (target.dims()[v], source.dims()[v]),
                "hom matrix shape at vertex {v}"
            );
        }
        for (ai, a) in pres.arrows.iter().enumerate() {
            let lhs = matrices[a.target].mul(source.arrow_matrix(ai));
            let rhs = target.arrow_matrix(ai).mul(&matrices[a.source]);
            assert!(lhs.sub(&rhs).is_zero(), "matrices do not intertwine arrow {ai}");
        }
        ModuleHom {
            source_dims: source.dims().to_vec(),
            target_dims: target.dims().to_vec(),
            matrices,
        }
    }

    pub fn identity(m: &Module) -> Self {
        let mats = m.dims().iter().map(|&d| RatMatrix::identity(d)).collect();
        ModuleHom::new(m, m, mats)
    }

    pub fn source_dims(&self) -> &[usize] {
        &self.source_dims
    }

    pub fn target_dims(&self) -> &[usize] {
        &self.target_dims
    }

    /// `self ∘ other` (first `other`, then `self`).
    pub fn compose(&self, other: &ModuleHom) -> ModuleHom {
        assert_eq!(self.source_dims, other.target_dims);
        ModuleHom {
            source_dims: other.source_dims.clone(),
            target_dims: self.target_dims.clone(),
            matrices: self
                .matrices
                .iter()
                .zip(&other.matrices)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn is_surjective(&self) -> bool {
        self.matrices
            .iter()
            .enumerate()
            .all(|(v, m)| m.rank() == self.target_dims[v])
    }

    pub fn is_vertexwise_invertible(&self) -> bool {
        self.source_dims == self.target_dims && self.matrices.iter().all(RatMatrix::is_invertible)
    }

    pub fn is_zero(&self) -> bool {
        self.matrices.iter().all(RatMatrix::is_zero)
    }

    /// Trace of the endomorphism `self ∘ other` of the target.
    pub fn trace_composed_with(&self, other: &ModuleHom) -> Rat {
        assert_eq!(self.source_dims, other.target_dims);
        assert_eq!(self.target_dims, other.source_dims);
        let mut total = Rat::zero();
        for (g, f) in self.matrices.iter().zip(&other.matrices) {
            let prod = g.mul(f);
            for i in 0..prod.rows() {
                total += prod.at(i, i).clone();
            }
        }
        total
    }

    /// All matrix entries in one flat vector, for coordinate computations.
    pub fn flatten(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for m in &self.matrices {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    out.push(m.at(r, c).clone());
                }
            }
        }
        out
    }

    pub fn linear_combination(basis: &[ModuleHom], coeffs: &[Rat]) -> ModuleHom {
        assert_eq!(basis.len(), coeffs.len());
        assert!(!basis.is_empty());
        let proto = &basis[0];
        let mut matrices: Vec<RatMatrix> = proto
            .matrices
            .iter()
            .map(|m| RatMatrix::zeros(m.rows(), m.cols()))
            .collect();
        for (h, c) in basis.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (acc, m) in matrices.iter_mut().zip(&h.matrices) {
                *acc = acc.sub(&m.scale(&-c.clone()));
            }
        }
        ModuleHom {
            source_dims: proto.source_dims.clone(),
            target_dims: proto.target_dims.clone(),
            matrices,
        }
    }
}

/// Exact basis of `Hom(M, N)`: the null space of the intertwining system
/// `f_{t(a)} phi^M_a = phi^N_a f_{s(a)}` over all arrows.
pub fn hom_space(m: &Module, n: &Module) -> Vec<ModuleHom> {
    assert!(m.same_algebra(n), "hom between modules over different algebras");
    let pres = m.algebra().presentation();
    let nv = pres.vertices;
    let mdims = m.dims();
    let ndims = n.dims();

    // Unknowns: entries of f_v, row-major, blocks by vertex.
    let offsets: Vec<usize> = (0..nv)
        .scan(0, |acc, v| {
            let off = *acc;
            *acc += ndims[v] * mdims[v];
            Some(off)
        })
        .collect();
    let unknowns = offsets.last().map_or(0, |&o| o) + ndims[nv - 1] * mdims[nv - 1];
    let index = |v: usize, r: usize, c: usize| offsets[v] + r * mdims[v] + c;

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (ai, a) in pres.arrows.iter().enumerate() {
        let phi_m = m.arrow_matrix(ai);
        let phi_n = n.arrow_matrix(ai);
        for r in 0..ndims[a.target] {
            for c in 0..mdims[a.source] {
                let mut row = vec![Rat::zero(); unknowns];
                for k in 0..mdims[a.target] {
                    let coeff = phi_m.at(k, c);
                    if !coeff.is_zero() {
                        let slot = index(a.target, r, k);
                        row[slot] = &row[slot] + coeff;
                    }
                }
                for k in 0..ndims[a.source] {
                    let coeff = phi_n.at(r, k);
                    if !coeff.is_zero() {
                        let slot = index(a.source, k, c);
                        row[slot] = &row[slot] - coeff;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }

    let kernel = if rows.is_empty() {
        // No constraints: every matrix tuple is a hom.
        (0..unknowns)
            .map(|i| {
                let mut v = vec![Rat::zero(); unknowns];
                v[i] = Rat::from_integer(1.into());
                v
            })
            .collect()
    } else {
        RatMatrix::from_rows(rows).kernel_basis()
    };

    kernel
        .into_iter()
        .map(|vecd| {
            let matrices: Vec<RatMatrix> = (0..nv)
                .map(|v| {
                    RatMatrix::from_fn(ndims[v], mdims[v], |r, c| vecd[index(v, r, c)].clone())
                })
                .collect();
            ModuleHom::new(m, n, matrices)
        })
        .collect()
}

/// Basis of the radical of `Hom(M, N)` for indecomposable `M`, `N`: the
/// maps `f` with `tr(f ∘ g) = 0` for every `g: N -> M`. Over the rationals
/// this is the trace-form kernel; for `M` and `N` non-isomorphic it returns
/// all of `Hom(M, N)`, for `M = N` the Jacobson radical of `End(M)`.
pub fn radical_hom(m: &Module, n: &Module) -> Vec<ModuleHom> {
    let forward = hom_space(m, n);
    if forward.is_empty() {
        return forward;
    }
    let backward = hom_space(n, m);
    if backward.is_empty() {
        return forward;
    }
    let gram = RatMatrix::from_fn(backward.len(), forward.len(), |j, i| {
        forward[i].trace_composed_with(&backward[j])
    });
    gram.kernel_basis()
        .into_iter()
        .map(|coeffs| ModuleHom::linear_combination(&forward, &coeffs))
        .collect()
}

/// Cap on candidate evaluations before the search reports itself
/// inconclusive; never expected to bind at desk scale.
const ISO_GRID_CAP: u64 = 200_000;

/// Decide `M ≅ N` by searching rational combinations of a Hom-space basis
/// for one that is invertible at every vertex.
///
/// The product of the vertex determinants is a polynomial of degree at most
/// `d = total dim` in each coefficient, so the grid `\{0, ..., d\}` per
/// coefficient is exhaustive: if no grid point is invertible the polynomial
/// vanishes identically and the modules are certified non-isomorphic.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool, AlgebraError> {
    assert!(m.same_algebra(n), "isomorphism test across algebras");
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return Ok(false);
    }
    let k = basis.len();
    let degree = m.total_dim() as u64;
    let radix = degree + 1;

    let invertible = |coeffs: &[Rat]| -> bool {
        ModuleHom::linear_combination(&basis, coeffs).is_vertexwise_invertible()
    };

    // Cheap candidates first: single basis elements, then the full sum.
    for i in 0..k {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs[i] = Rat::from_integer(1.into());
        if invertible(&coeffs) {
            return Ok(true);
        }
    }
    if invertible(&vec![Rat::from_integer(1.into()); k]) {
        return Ok(true);
    }

    let total: u64 = radix
        .checked_pow(k.min(32) as u32)
        .filter(|_| k <= 32)
        .unwrap_or(u64::MAX);
    let budget = total.min(ISO_GRID_CAP);
    for counter in 0..budget {
        let mut rest = counter;
        let coeffs: Vec<Rat> = (0..k)
            .map(|_| {
                let digit = rest % radix;
                rest /= radix;
                Rat::from_integer((digit as i64).into())
            })
            .collect();
        if invertible(&coeffs) {
            return Ok(true);
        }
    }
    if total <= ISO_GRID_CAP {
        Ok(false)
    } else {
        Err(AlgebraError::IsoInconclusive)
    }
}
