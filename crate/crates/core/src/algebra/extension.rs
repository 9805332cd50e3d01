//! Realising extension classes: the middle term of
//! `0 -> B^r -> X -> A -> 0` as a pushout along a projective presentation
//! of `A`.
//!
//! With `0 -> Ω -> P_0 -> A -> 0` the syzygy sequence, classes in
//! `Ext^1(A, B)` are homomorphisms `Ω -> B` modulo restrictions of
//! `P_0 -> B`; gluing `B^r` and `P_0` along the chosen class maps yields
//! the extension.

use super::hom::{hom_space, ModuleHom};
use super::module::Module;
use super::resolution::{kernel_submodule, projective_cover};
use super::AlgebraError;
use crate::linalg::{RatMatrix, SubspaceReducer};

/// `Ext^1(A, B)` presented by syzygy representatives.
pub struct Ext1Classes {
    a: Module,
    b: Module,
    p0: Module,
    omega: Module,
    inclusion: ModuleHom,
    /// Representatives `Ω -> B` of a basis of `Ext^1(A, B)`.
    pub reps: Vec<ModuleHom>,
    /// Flattened span of the restricted maps `P_0 -> B`, for membership tests.
    boundary: SubspaceReducer,
    omega_homs: Vec<ModuleHom>,
}

impl Ext1Classes {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

/// Compute `Ext^1(A, B)` with explicit representatives.
pub fn ext1_classes(a: &Module, b: &Module) -> Ext1Classes {
    let (p0, _, cover) = projective_cover(a);
    let (omega, inclusion) = kernel_submodule(&p0, &cover);

    let omega_homs = hom_space(&omega, b);
    let p0_homs = hom_space(&p0, b);

    // Coordinates of restricted maps inside Hom(Ω, B).
    let coords = |h: &ModuleHom| -> Vec<crate::linalg::Rat> { h.flatten() };
    let dim_flat = omega_homs.first().map_or(0, |h| h.flatten().len());
    let restricted: Vec<Vec<crate::linalg::Rat>> =
        p0_homs.iter().map(|g| coords(&g.compose(&inclusion))).collect();
    let boundary_span = RatMatrix::from_fn(dim_flat, restricted.len(), |r, c| {
        restricted[c][r].clone()
    });

    // Work in the coordinates of the Hom(Ω, B) basis rather than the flat
    // ambient space, so the quotient picks representatives among the basis.
    let basis_flat: Vec<Vec<crate::linalg::Rat>> = omega_homs.iter().map(coords).collect();
    let basis_matrix =
        RatMatrix::from_fn(dim_flat, omega_homs.len(), |r, c| basis_flat[c][r].clone());
    let boundary_coords = if omega_homs.is_empty() {
        RatMatrix::zeros(0, 0)
    } else {
        basis_matrix.solve(&boundary_span).expect("restricted maps lie in Hom(Ω, B)")
    };
    let boundary = SubspaceReducer::new(&boundary_coords);
    let reps: Vec<ModuleHom> = boundary.free.iter().map(|&i| omega_homs[i].clone()).collect();

    Ext1Classes { a: a.clone(), b: b.clone(), p0, omega, inclusion, reps, boundary, omega_homs }
}

/// Coordinates of a representative `Ω -> B` in the `Ext^1` quotient.
fn class_coordinates(classes: &Ext1Classes, rep: &ModuleHom) -> Vec<crate::linalg::Rat> {
    let basis_flat: Vec<Vec<crate::linalg::Rat>> =
        classes.omega_homs.iter().map(ModuleHom::flatten).collect();
    let dim_flat = basis_flat.first().map_or(0, Vec::len);
    let basis_matrix = RatMatrix::from_fn(dim_flat, classes.omega_homs.len(), |r, c| {
        basis_flat[c][r].clone()
    });
    let target = RatMatrix::from_fn(dim_flat, 1, |r, _| rep.flatten()[r].clone());
    let sol = basis_matrix.solve(&target).expect("representative lies in Hom(Ω, B)");
    let coords: Vec<crate::linalg::Rat> =
        (0..classes.omega_homs.len()).map(|i| sol.at(i, 0).clone()).collect();
    classes.boundary.reduce(&coords)
}

/// Middle term of `0 -> B^r -> X -> A -> 0` realising the chosen classes,
/// which must be independent in `Ext^1(A, B)`.
pub fn realize_extension(
    classes: &Ext1Classes,
    chosen: &[ModuleHom],
) -> Result<Module, AlgebraError> {
    let a = &classes.a;
    let b = &classes.b;
    if chosen.is_empty() {
        return Ok(a.clone());
    }
    let r = chosen.len();

    // Independence of the chosen classes modulo boundaries.
    let class_coords: Vec<Vec<crate::linalg::Rat>> =
        chosen.iter().map(|rep| class_coordinates(classes, rep)).collect();
    let rows = class_coords.first().map_or(0, Vec::len);
    let coord_matrix = RatMatrix::from_fn(rows, r, |i, j| class_coords[j][i].clone());
    if coord_matrix.rank() != r {
        return Err(AlgebraError::DependentClasses);
    }

    // Y = B^r ⊕ P_0, W = { (F(w), -ι(w)) : w ∈ Ω }.
    let b_copies: Vec<&Module> = std::iter::repeat(b).take(r).collect();
    let mut parts = b_copies;
    parts.push(&classes.p0);
    let ambient = Module::direct_sum(&parts);

    let nv = a.dims().len();
    let span: Vec<RatMatrix> = (0..nv)
        .map(|v| {
            let omega_dim = classes.omega.dims()[v];
            let mut stacked = RatMatrix::zeros(0, omega_dim);
            for rep in chosen {
                stacked = stacked.vstack(&rep.matrices[v]);
            }
            stacked.vstack(&classes.inclusion.matrices[v].scale(&-crate::linalg::rat(1)))
        })
        .collect();

    let (extension, _projection) = ambient.quotient(&span);
    for v in 0..nv {
        debug_assert_eq!(extension.dims()[v], a.dims()[v] + r * b.dims()[v]);
    }
    Ok(extension)
}

/// Universal extension: realise a full basis of `Ext^1(A, B)`. When
/// `Ext^1(B, B) = 0` the result has no extensions against `B` left; this is
/// checked.
pub fn universal_extension_module(a: &Module, b: &Module) -> Module {
    let classes = ext1_classes(a, b);
    let reps = classes.reps.clone();
    let x = realize_extension(&classes, &reps).expect("basis classes are independent");
    let ext_b_b = super::resolution::ext_groups(b, b, 1)[1];
    if ext_b_b == 0 {
        let ext_x_b = super::resolution::ext_groups(&x, b, 1)[1];
        assert_eq!(ext_x_b, 0, "universal extension retains Ext^1 against B");
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hom::is_isomorphic;
    use crate::algebra::resolution::ext_groups;
    use crate::algebra::test_fixtures::t1_algebra;

    #[test]
    fn empty_class_set_returns_the_source() {
        let alg = t1_algebra();
        let s1 = Module::simple(alg.clone(), 1);
        let p0 = Module::projective(alg.clone(), 0);
        let classes = ext1_classes(&s1, &p0);
        let x = realize_extension(&classes, &[]).unwrap();
        assert_eq!(x.dims(), s1.dims());
    }

    #[test]
    fn universal_extension_reverses_the_resolution() {
        // Ext^1(S_1, P(0)) is one-dimensional and the middle term is P(1).
        let alg = t1_algebra();
        let s1 = Module::simple(alg.clone(), 1);
        let p0 = Module::projective(alg.clone(), 0);
        assert_eq!(ext_groups(&s1, &p0, 1)[1], 1);
        let x = universal_extension_module(&s1, &p0);
        assert_eq!(x.dims(), &[1, 2]);
        let p1 = Module::projective(alg.clone(), 1);
        assert!(is_isomorphic(&x, &p1).unwrap());
    }

    #[test]
    fn vanishing_ext_forces_the_trivial_extension() {
        let alg = t1_algebra();
        let p0 = Module::projective(alg.clone(), 0);
        let p1 = Module::projective(alg.clone(), 1);
        let classes = ext1_classes(&p0, &p1);
        assert_eq!(classes.dim(), 0);
        let x = universal_extension_module(&p0, &p1);
        assert_eq!(x.dims(), p0.dims());
    }

    #[test]
    fn dependent_classes_are_rejected() {
        let alg = t1_algebra();
        let s1 = Module::simple(alg.clone(), 1);
        let p0 = Module::projective(alg.clone(), 0);
        let classes = ext1_classes(&s1, &p0);
        let rep = classes.reps[0].clone();
        assert_eq!(
            realize_extension(&classes, &[rep.clone(), rep]).unwrap_err(),
            AlgebraError::DependentClasses
        );
    }

    #[test]
    fn extension_dimension_law() {
        let alg = t1_algebra();
        let s0 = Module::simple(alg.clone(), 0);
        let s1 = Module::simple(alg.clone(), 1);
        // Ext^1(S_0, S_1) is one-dimensional (the arrow alpha).
        let classes = ext1_classes(&s0, &s1);
        assert_eq!(classes.dim(), 1);
        let reps = classes.reps.clone();
        let x = realize_extension(&classes, &reps).unwrap();
        assert_eq!(x.dims(), &[1, 1]);
    }
}
