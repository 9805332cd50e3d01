//! Minimal projective resolutions, Ext groups as cohomology of the Hom
//! complex, global dimension, and truncation of projective complexes with
//! exact positive tails.

use super::basis::AlgebraBasis;
use super::hom::{hom_space, ModuleHom};
use super::module::Module;
use super::AlgebraError;
use crate::linalg::RatMatrix;
use std::sync::Arc;

pub const DEFAULT_RESOLUTION_CAP: usize = 16;

/// A bounded complex of projective modules. `components[i]` sits in degree
/// `min_degree + i`, `differentials[i]` maps `components[i]` to
/// `components[i + 1]`, and `multiplicities[i][v]` counts the `P(v)`
/// summands of `components[i]`.
#[derive(Debug)]
pub struct ProjectiveComplex {
    pub min_degree: i32,
    pub multiplicities: Vec<Vec<usize>>,
    pub components: Vec<Module>,
    pub differentials: Vec<ModuleHom>,
}

impl ProjectiveComplex {
    pub fn new(
        min_degree: i32,
        parts: Vec<(Vec<usize>, Module)>,
        differentials: Vec<ModuleHom>,
    ) -> Self {
        assert!(!parts.is_empty());
        assert_eq!(differentials.len() + 1, parts.len());
        let (multiplicities, components): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
        for (i, d) in differentials.iter().enumerate() {
            assert_eq!(d.source_dims(), components[i].dims());
            assert_eq!(d.target_dims(), components[i + 1].dims());
        }
        for pair in differentials.windows(2) {
            assert!(pair[1].compose(&pair[0]).is_zero(), "differentials do not compose to zero");
        }
        for (mults, comp) in multiplicities.iter().zip(&components) {
            let algebra = comp.algebra();
            let expected = projective_sum_dims(algebra, mults);
            assert_eq!(comp.dims(), expected, "multiplicities inconsistent with component dims");
        }
        ProjectiveComplex { min_degree, multiplicities, components, differentials }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_degree(&self) -> i32 {
        self.min_degree + self.len() as i32 - 1
    }

    /// Per-vertex dimensions of the cohomology in each degree.
    pub fn cohomology_dims(&self) -> Vec<(i32, Vec<usize>)> {
        let nv = self.components[0].dims().len();
        (0..self.len())
            .map(|i| {
                let dims: Vec<usize> = (0..nv)
                    .map(|v| {
                        let kernel = match self.differentials.get(i) {
                            Some(d) => {
                                let m = &d.matrices[v];
                                m.cols() - m.rank()
                            }
                            None => self.components[i].dims()[v],
                        };
                        let image = if i == 0 {
                            0
                        } else {
                            self.differentials[i - 1].matrices[v].rank()
                        };
                        kernel - image
                    })
                    .collect();
                (self.min_degree + i as i32, dims)
            })
            .collect()
    }
}

fn projective_sum_dims(algebra: &Arc<AlgebraBasis>, mults: &[usize]) -> Vec<usize> {
    let nv = algebra.vertices();
    let mut dims = vec![0usize; nv];
    for (v, &count) in mults.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let layout = algebra.projective_layout(v);
        for w in 0..nv {
            dims[w] += count * layout[w].len();
        }
    }
    dims
}

/// Direct sum of `mults[v]` copies of each `P(v)`, in vertex order.
pub fn projective_sum(algebra: &Arc<AlgebraBasis>, mults: &[usize]) -> Module {
    let parts: Vec<Module> = mults
        .iter()
        .enumerate()
        .flat_map(|(v, &count)| (0..count).map(move |_| v))
        .map(|v| Module::projective(algebra.clone(), v))
        .collect();
    if parts.is_empty() {
        return Module::zero(algebra.clone());
    }
    let refs: Vec<&Module> = parts.iter().collect();
    Module::direct_sum(&refs)
}

/// Projective cover `P -> M`: one `P(v)` per top basis vector, mapping the
/// class of a path `p` starting at `v` to `p` acting on the lifted vector.
pub fn projective_cover(m: &Module) -> (Module, Vec<usize>, ModuleHom) {
    let algebra = m.algebra().clone();
    let nv = algebra.vertices();
    let lifts = m.top_lift();
    let mults: Vec<usize> = lifts.iter().map(RatMatrix::cols).collect();
    let cover_module = projective_sum(&algebra, &mults);

    let mut matrices: Vec<RatMatrix> =
        (0..nv).map(|w| RatMatrix::zeros(m.dims()[w], cover_module.dims()[w])).collect();
    let mut col_offsets = vec![0usize; nv];
    for v in 0..nv {
        let layout = algebra.projective_layout(v);
        for copy in 0..mults[v] {
            let generator = lifts[v].column(copy);
            for w in 0..nv {
                for &id in &layout[w] {
                    let path = algebra.basis_path(id);
                    let image = m.apply_word(v, &path.arrows, &generator);
                    let col = col_offsets[w];
                    for (r, value) in image.into_iter().enumerate() {
                        matrices[w].set(r, col, value);
                    }
                    col_offsets[w] += 1;
                }
            }
            let _ = copy;
        }
    }
    let cover = ModuleHom::new(&cover_module, m, matrices);
    debug_assert!(cover.is_surjective(), "projective cover must be surjective");
    (cover_module, mults, cover)
}

/// Kernel of a homomorphism as a submodule of its source, with inclusion.
pub fn kernel_submodule(source: &Module, f: &ModuleHom) -> (Module, ModuleHom) {
    let spans: Vec<RatMatrix> = f
        .matrices
        .iter()
        .map(|m| {
            let basis = m.kernel_basis();
            RatMatrix::from_fn(m.cols(), basis.len(), |r, c| basis[c][r].clone())
        })
        .collect();
    source.submodule(&spans)
}

struct ResolutionPrefix {
    /// Syzygy steps in construction order: `steps[0]` covers `M`.
    steps: Vec<(Module, Vec<usize>)>,
    /// `maps[k]` maps `steps[k]` onto the previous kernel (composed into the
    /// previous cover's source for `k > 0`).
    maps: Vec<ModuleHom>,
    augmentation: ModuleHom,
    reached_zero: bool,
}

/// Iterated projective covers of syzygies, stopping at a zero kernel or
/// after `limit` syzygy steps, whichever comes first.
fn resolve_prefix(m: &Module, limit: usize) -> ResolutionPrefix {
    let (p0, mults0, cover0) = projective_cover(m);
    let mut steps = vec![(p0, mults0)];
    let mut maps: Vec<ModuleHom> = Vec::new();
    let augmentation = cover0.clone();

    let (mut kernel, mut inclusion) = kernel_submodule(&steps[0].0, &cover0);
    let mut reached_zero = kernel.is_zero();
    while !reached_zero && steps.len() <= limit {
        let (p, mults, cover) = projective_cover(&kernel);
        let differential = inclusion.compose(&cover);
        let (next_kernel, next_inclusion) = kernel_submodule(&p, &cover);
        steps.push((p, mults));
        maps.push(differential);
        kernel = next_kernel;
        inclusion = next_inclusion;
        reached_zero = kernel.is_zero();
    }
    ResolutionPrefix { steps, maps, augmentation, reached_zero }
}

/// Minimal projective resolution `0 -> P_L -> ... -> P_0` (degrees `-L..=0`),
/// with the augmentation `P_0 -> M`.
pub fn minimal_projective_resolution(
    m: &Module,
    max_length: usize,
) -> Result<(ProjectiveComplex, ModuleHom), AlgebraError> {
    let prefix = resolve_prefix(m, max_length);
    if !prefix.reached_zero {
        return Err(AlgebraError::ResolutionTooLong { cap: max_length });
    }
    let mut parts: Vec<(Vec<usize>, Module)> =
        prefix.steps.into_iter().map(|(module, mults)| (mults, module)).collect();
    parts.reverse();
    let mut differentials = prefix.maps;
    differentials.reverse();
    let min_degree = -(parts.len() as i32 - 1);
    Ok((ProjectiveComplex::new(min_degree, parts, differentials), prefix.augmentation))
}

/// Coordinates of `hom` in a basis of its Hom space.
fn coords_in_basis(basis: &[ModuleHom], hom: &ModuleHom) -> Vec<crate::linalg::Rat> {
    if basis.is_empty() {
        assert!(hom.is_zero(), "nonzero hom in zero Hom space");
        return Vec::new();
    }
    let flat: Vec<Vec<crate::linalg::Rat>> = basis.iter().map(ModuleHom::flatten).collect();
    let rows = flat[0].len();
    let matrix = RatMatrix::from_fn(rows, basis.len(), |r, c| flat[c][r].clone());
    let target = RatMatrix::from_fn(rows, 1, |r, _| hom.flatten()[r].clone());
    let sol = matrix.solve(&target).expect("hom lies in the span of the basis");
    (0..basis.len()).map(|i| sol.at(i, 0).clone()).collect()
}

/// `dim Ext^k(M, N)` for `k = 0..=up_to`, via the Hom complex of a minimal
/// resolution of `M`.
pub fn ext_groups(m: &Module, n: &Module, up_to: usize) -> Vec<usize> {
    let prefix = resolve_prefix(m, up_to + 1);
    let components: Vec<&Module> = prefix.steps.iter().map(|(p, _)| p).collect();
    let hom_bases: Vec<Vec<ModuleHom>> =
        components.iter().map(|p| hom_space(p, n)).collect();

    // delta_i : Hom(P_i, N) -> Hom(P_{i+1}, N), f -> f ∘ d_{i+1}.
    let mut delta_ranks = vec![0usize; hom_bases.len()];
    for i in 0..hom_bases.len().saturating_sub(1) {
        if hom_bases[i].is_empty() || hom_bases[i + 1].is_empty() {
            continue;
        }
        let d = &prefix.maps[i];
        let columns: Vec<Vec<crate::linalg::Rat>> = hom_bases[i]
            .iter()
            .map(|f| {
                let composed = f.compose(d);
                coords_in_basis(&hom_bases[i + 1], &composed)
            })
            .collect();
        let matrix = RatMatrix::from_fn(hom_bases[i + 1].len(), hom_bases[i].len(), |r, c| {
            columns[c][r].clone()
        });
        delta_ranks[i] = matrix.rank();
    }

    (0..=up_to)
        .map(|k| {
            let dim_k = hom_bases.get(k).map_or(0, Vec::len);
            let rank_out = if k < hom_bases.len() { delta_ranks[k] } else { 0 };
            let rank_in = if k == 0 { 0 } else if k <= hom_bases.len() { delta_ranks[k - 1] } else { 0 };
            dim_k - rank_out - rank_in
        })
        .collect()
}

/// Maximum of the projective dimensions of the simple modules.
pub fn global_dimension(
    algebra: &Arc<AlgebraBasis>,
    max_length: usize,
) -> Result<usize, AlgebraError> {
    let mut best = 0;
    for v in 0..algebra.vertices() {
        let simple = Module::simple(algebra.clone(), v);
        let prefix = resolve_prefix(&simple, max_length);
        if !prefix.reached_zero {
            return Err(AlgebraError::ResolutionTooLong { cap: max_length });
        }
        best = best.max(prefix.steps.len() - 1);
    }
    Ok(best)
}

/// Split exact tails in positive degrees off a projective complex, leaving
/// a complex ending in degree zero with the same cohomology.
///
/// Each round looks at the two rightmost nonzero terms `D^{a-1} -> D^a`
/// (`a > 0`): the differential must be onto, a section is found by a linear
/// solve over the Hom space, and the summand `[D^a = D^a]` is split off by
/// realising the complementary kernel as a standard projective sum through
/// its own projective cover.
pub fn truncate_projective_complex(
    complex: &ProjectiveComplex,
) -> Result<ProjectiveComplex, AlgebraError> {
    let algebra = complex.components[0].algebra().clone();
    let mut parts: Vec<(Vec<usize>, Module)> = complex
        .multiplicities
        .iter()
        .cloned()
        .zip(complex.components.iter().cloned())
        .collect();
    let mut differentials = complex.differentials.clone();
    let min_degree = complex.min_degree;

    loop {
        // Drop trailing zero components.
        while parts.len() > 1 && parts.last().unwrap().1.is_zero() {
            parts.pop();
            differentials.pop();
        }
        let max_degree = min_degree + parts.len() as i32 - 1;
        if max_degree <= 0 {
            break;
        }
        if parts.len() == 1 {
            // A single nonzero component in positive degree has cohomology there.
            return Err(AlgebraError::TailNotExact);
        }
        let n = parts.len();
        let d = differentials[n - 2].clone();
        if !d.is_surjective() {
            return Err(AlgebraError::TailNotExact);
        }
        let last = parts[n - 1].1.clone();
        let prev = parts[n - 2].1.clone();

        // Section: d ∘ s = id, solved over Hom(last, prev).
        let hom_basis = hom_space(&last, &prev);
        let identity = ModuleHom::identity(&last);
        let composed: Vec<Vec<crate::linalg::Rat>> =
            hom_basis.iter().map(|h| d.compose(h).flatten()).collect();
        let rows = identity.flatten().len();
        let section = if rows == 0 {
            ModuleHom::new(&last, &prev, {
                let nv = algebra.vertices();
                (0..nv)
                    .map(|v| RatMatrix::zeros(prev.dims()[v], last.dims()[v]))
                    .collect()
            })
        } else {
            let matrix = RatMatrix::from_fn(rows, hom_basis.len(), |r, c| composed[c][r].clone());
            let target = RatMatrix::from_fn(rows, 1, |r, _| identity.flatten()[r].clone());
            let sol = matrix.solve(&target).ok_or(AlgebraError::TailNotExact)?;
            let coeffs: Vec<crate::linalg::Rat> =
                (0..hom_basis.len()).map(|i| sol.at(i, 0).clone()).collect();
            ModuleHom::linear_combination(&hom_basis, &coeffs)
        };
        debug_assert!(d.compose(&section).is_vertexwise_invertible());

        // ker(d) realised as a standard projective sum via its own cover.
        let (kernel, inclusion) = kernel_submodule(&prev, &d);
        let (standard, std_mults, cover) = projective_cover(&kernel);
        assert_eq!(standard.dims(), kernel.dims(), "kernel of split tail must be projective");
        let expected: Vec<usize> = parts[n - 2]
            .0
            .iter()
            .zip(&parts[n - 1].0)
            .map(|(&a, &b)| a - b)
            .collect();
        assert_eq!(std_mults, expected, "split summand multiplicities");
        let embed = inclusion.compose(&cover); // standard -> prev, injective

        // Rewrite the incoming differential through the standard sum.
        let new_incoming = if n >= 3 {
            let incoming = &differentials[n - 3];
            let nv = algebra.vertices();
            let matrices: Vec<RatMatrix> = (0..nv)
                .map(|v| {
                    embed.matrices[v]
                        .solve(&incoming.matrices[v])
                        .expect("incoming image lies in the kernel of the tail")
                })
                .collect();
            Some(ModuleHom::new(&parts[n - 3].1, &standard, matrices))
        } else {
            None
        };

        parts[n - 2] = (std_mults, standard);
        parts.pop();
        differentials.pop();
        if let Some(hom) = new_incoming {
            differentials[n - 3] = hom;
        }
        let _ = section;
    }

    Ok(ProjectiveComplex::new(min_degree, parts, differentials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_fixtures::{a2_algebra, t1_algebra};

    #[test]
    fn resolution_of_the_short_simple() {
        // 0 -> P(0) -> P(1) -> S_1 -> 0.
        let alg = t1_algebra();
        let s1 = Module::simple(alg.clone(), 1);
        let (complex, _aug) = minimal_projective_resolution(&s1, 16).unwrap();
        assert_eq!(complex.len(), 2);
        assert_eq!(complex.min_degree, -1);
        assert_eq!(complex.multiplicities, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn resolution_of_the_long_simple() {
        // 0 -> P(0) -> P(1) -> P(0) -> S_0 -> 0.
        let alg = t1_algebra();
        let s0 = Module::simple(alg.clone(), 0);
        let (complex, _aug) = minimal_projective_resolution(&s0, 16).unwrap();
        assert_eq!(complex.len(), 3);
        assert_eq!(
            complex.multiplicities,
            vec![vec![1, 0], vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn projectives_resolve_in_length_zero() {
        let alg = t1_algebra();
        for v in 0..2 {
            let p = Module::projective(alg.clone(), v);
            let (complex, _) = minimal_projective_resolution(&p, 16).unwrap();
            assert_eq!(complex.len(), 1);
            assert_eq!(complex.min_degree, 0);
        }
    }

    #[test]
    fn ext_tables_for_the_two_vertex_presentation() {
        let alg = t1_algebra();
        let s0 = Module::simple(alg.clone(), 0);
        let s1 = Module::simple(alg.clone(), 1);
        let p0 = Module::projective(alg.clone(), 0);
        assert_eq!(ext_groups(&s0, &s0, 2), vec![1, 0, 1]);
        assert_eq!(ext_groups(&s1, &s1, 2), vec![1, 0, 0]);
        // Hom(S_1, P(0)) is the socle map into span(alpha).
        assert_eq!(ext_groups(&s1, &p0, 1), vec![1, 1]);
    }

    #[test]
    fn global_dimensions() {
        use crate::algebra::quiver::QuiverPresentation;
        let arrowless = QuiverPresentation::new(3, vec![], vec![]).unwrap();
        let alg = Arc::new(AlgebraBasis::build(arrowless, 4).unwrap());
        assert_eq!(global_dimension(&alg, 16).unwrap(), 0);

        assert_eq!(global_dimension(&a2_algebra(), 16).unwrap(), 1);
        assert_eq!(global_dimension(&t1_algebra(), 16).unwrap(), 2);
    }

    #[test]
    fn truncation_leaves_degree_zero_complexes_alone() {
        let alg = t1_algebra();
        let s0 = Module::simple(alg.clone(), 0);
        let (complex, _) = minimal_projective_resolution(&s0, 16).unwrap();
        let before = complex.cohomology_dims();
        let truncated = truncate_projective_complex(&complex).unwrap();
        assert_eq!(truncated.max_degree(), 0);
        assert_eq!(truncated.cohomology_dims(), before);
        assert_eq!(truncated.multiplicities, complex.multiplicities);
    }

    #[test]
    fn truncation_removes_an_identity_tail() {
        let alg = t1_algebra();
        let s1 = Module::simple(alg.clone(), 1);
        let (complex, _) = minimal_projective_resolution(&s1, 16).unwrap();
        let glued = crate::algebra::test_fixtures::glue_identity_tail(&complex, &[0, 1]);
        assert_eq!(glued.max_degree(), 1);
        let truncated = truncate_projective_complex(&glued).unwrap();
        assert_eq!(truncated.max_degree(), 0);
        assert_eq!(truncated.multiplicities, complex.multiplicities);
        // Cohomology agrees with the original in every shared degree.
        assert_eq!(truncated.cohomology_dims(), complex.cohomology_dims());
    }

    #[test]
    fn truncation_rejects_a_non_exact_tail() {
        let alg = t1_algebra();
        let p0 = Module::projective(alg.clone(), 0);
        let zero = Module::zero(alg.clone());
        let nv = 2;
        let zero_to_p = ModuleHom::new(&zero, &p0, (0..nv).map(|v| RatMatrix::zeros(p0.dims()[v], 0)).collect());
        // [0 -> P(0)] in degrees (0, 1): the tail differential is not onto.
        let complex = ProjectiveComplex::new(
            0,
            vec![(vec![0, 0], zero), (vec![1, 0], p0)],
            vec![zero_to_p],
        );
        assert_eq!(
            truncate_projective_complex(&complex).unwrap_err(),
            AlgebraError::TailNotExact
        );
    }
}
