//! Hom spaces of right-module maps with their induced right action.
//!
//! A map S → N is a dim S × dim N matrix intertwining every action matrix.
//! The space of all such maps is the kernel of the flattened intertwining
//! constraints; when S is a bimodule, Hom(S, N) becomes a right module via
//! (f·a)(t) = f(a·t).

use crate::error::Error;
use crate::field::Scalar;
use crate::matrix::{Matrix, RrefBuilder, Subspace, Vector};
use crate::module::Module;
use std::sync::Arc;

/// All right-module maps source → target, as a canonical subspace of the
/// row-major flattened matrix space.
pub fn intertwiner_space(source: &Module, target: &Module) -> Subspace {
    let f = source.algebra.field;
    let (ds, dn) = (source.dim, target.dim);
    let ambient = ds * dn;
    let mut constraints = RrefBuilder::new(f, ambient);
    for j in 0..source.algebra.dim {
        let rho_s = &source.action[j];
        let rho_n = &target.action[j];
        for i in 0..ds {
            for m in 0..dn {
                // (ρ_S F − F ρ_N) entry (i, m)
                let mut row: Vec<(usize, Scalar)> = Vec::new();
                for t in 0..ds {
                    let c = rho_s.get(i, t);
                    if !f.is_zero(c) {
                        row.push((t * dn + m, c.clone()));
                    }
                }
                for t in 0..dn {
                    let c = rho_n.get(t, m);
                    if !f.is_zero(c) {
                        let idx = i * dn + t;
                        match row.binary_search_by_key(&idx, |(k, _)| *k) {
                            Ok(pos) => {
                                let merged = f.sub(&row[pos].1, c);
                                if f.is_zero(&merged) {
                                    row.remove(pos);
                                } else {
                                    row[pos].1 = merged;
                                }
                            }
                            Err(pos) => row.insert(pos, (idx, f.neg(c))),
                        }
                    }
                }
                constraints.insert_sparse(row);
            }
        }
    }
    constraints.into_subspace().basis.kernel_basis()
}

pub struct HomSpace {
    /// Hom(S, N) with the right action (f·a)(t) = f(a·t)
    pub module: Module,
    /// the maps themselves, one dim S × dim N matrix per basis element
    pub basis: Vec<Matrix>,
    /// the same basis flattened row-major, for coordinate queries
    pub flat: Subspace,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl HomSpace {
    /// Apply the map with the given coordinates to a source vector.
    pub fn evaluate(&self, coords: &[Scalar], v: &[Scalar]) -> Vector {
        let f = self.module.algebra.field;
        let mut out = vec![f.zero(); self.target_dim];
        for (c, mat) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            let img = crate::matrix::row_times_matrix(v, mat);
            for (o, x) in out.iter_mut().zip(img) {
                *o = f.add_mul(o, c, &x);
            }
        }
        out
    }

    /// Coordinates of an explicit map, if it lies in the space.
    pub fn coords_of(&self, map: &Matrix) -> Option<Vector> {
        self.flat.coords_of(&flatten(map))
    }
}

pub(crate) fn flatten(m: &Matrix) -> Vector {
    let mut out = Vec::with_capacity(m.rows * m.cols);
    for i in 0..m.rows {
        out.extend_from_slice(m.row(i));
    }
    out
}

fn unflatten(field: crate::field::FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_fn(field, rows, cols, |i, j| v[i * cols + j].clone())
}

/// Hom_A(S, N) for a bimodule S, as a right module.
pub fn hom_over(s: &Module, n: &Module) -> Result<HomSpace, Error> {
    if !Arc::ptr_eq(&s.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let s_left = s.left_matrices()?.clone();
    let a = &s.algebra;
    let f = a.field;
    let flat = intertwiner_space(s, n);
    let dim = flat.dim();
    let basis: Vec<Matrix> = (0..dim)
        .map(|p| unflatten(f, s.dim, n.dim, flat.basis.row(p)))
        .collect();
    // (f·a)(t) = f(t·λ_S(a)), so the matrix of f·a is λ_S(a)·F
    let action: Vec<Matrix> = (0..a.dim)
        .map(|j| {
            let mut out = Matrix::zero(f, dim, dim);
            for (p, mat) in basis.iter().enumerate() {
                let acted = s_left[j].mul(mat);
                let coords = flat
                    .coords_of(&flatten(&acted))
                    .expect("hom space closed under the right action");
                out.set_row(p, &coords);
            }
            out
        })
        .collect();
    let module = Module::new(Arc::clone(a), dim, action, None)?;
    Ok(HomSpace {
        module,
        basis,
        flat,
        source_dim: s.dim,
        target_dim: n.dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{kronecker_quiver, path_algebra};
    use crate::field::FieldSpec;
    use crate::module::random_module;
    use crate::tensor::tensor_over;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn yoneda_on_random_modules() {
        // Hom(A, N) ≅ N
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let reg = Module::regular(&a);
        for seed in 0..10u64 {
            let n = random_module(&a, &mut crate::seeded_rng(300 + seed), 1, 6);
            let h = hom_over(&reg, &n).unwrap();
            assert_eq!(h.module.dim, n.dim);
        }
    }

    #[test]
    fn hom_into_zero() {
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let sigma = Module::dual_regular(&a);
        let zero = Module::zero(Arc::clone(&a), false);
        let h = hom_over(&sigma, &zero).unwrap();
        assert_eq!(h.module.dim, 0);
    }

    #[test]
    fn adjunction_dimensions() {
        // dim Hom(M⊗σ, N) = dim Hom(M, Hom(σ, N)); the two sides go through
        // tensor_over and hom_over respectively, sharing no intermediate
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let sigma = Module::dual_regular(&a);
        for seed in 0..6u64 {
            let mut rng = crate::seeded_rng(400 + seed);
            let m = random_module(&a, &mut rng, 1, 4);
            let n = random_module(&a, &mut rng, 1, 4);
            let lhs = intertwiner_space(&tensor_over(&m, &sigma).unwrap().module, &n).dim();
            let inner = hom_over(&sigma, &n).unwrap();
            let rhs = intertwiner_space(&m, &inner.module).dim();
            assert_eq!(lhs, rhs, "adjunction dimension mismatch at seed {seed}");
        }
    }

    #[test]
    fn adjunction_is_an_explicit_isomorphism() {
        // Φ(g)(x) = g(x ⊗ −) written as a matrix between the two canonical
        // bases must be invertible
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let sigma = Module::dual_regular(&a);
        let f = q();
        for seed in 0..4u64 {
            let mut rng = crate::seeded_rng(500 + seed);
            let m = random_module(&a, &mut rng, 1, 3);
            let n = random_module(&a, &mut rng, 1, 3);
            let t = tensor_over(&m, &sigma).unwrap();
            let lhs = intertwiner_space(&t.module, &n);
            let inner = hom_over(&sigma, &n).unwrap();
            let rhs = intertwiner_space(&m, &inner.module);
            assert_eq!(lhs.dim(), rhs.dim());
            let mut phi = Matrix::zero(f, lhs.dim(), rhs.dim());
            for g_idx in 0..lhs.dim() {
                let g = unflatten(f, t.module.dim, n.dim, lhs.basis.row(g_idx));
                // row x of Φ(g): coordinates of the map t ↦ g(x⊗t)
                let mut phi_g = Matrix::zero(f, m.dim, inner.module.dim);
                for x in 0..m.dim {
                    let mut fx = Matrix::zero(f, sigma.dim, n.dim);
                    let mut ex = vec![f.zero(); m.dim];
                    ex[x] = f.one();
                    for v in 0..sigma.dim {
                        let mut ev = vec![f.zero(); sigma.dim];
                        ev[v] = f.one();
                        let class = t.pure(&ex, &ev);
                        fx.set_row(v, &crate::matrix::row_times_matrix(&class, &g));
                    }
                    let coords = inner.coords_of(&fx).expect("Φ(g)(x) is a module map");
                    phi_g.set_row(x, &coords);
                }
                let coords = rhs
                    .coords_of(&flatten(&phi_g))
                    .expect("Φ(g) intertwines the actions");
                phi.set_row(g_idx, &coords);
            }
            assert_eq!(phi.rank(), lhs.dim(), "Φ must be invertible");
        }
    }

    #[test]
    fn right_action_matches_precomposition() {
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let sigma = Module::dual_regular(&a);
        let n = random_module(&a, &mut crate::seeded_rng(42), 2, 5);
        let h = hom_over(&sigma, &n).unwrap();
        let s_left = sigma.left_matrices().unwrap();
        for j in 0..a.dim {
            for p in 0..h.module.dim {
                let mut coords = vec![q().zero(); h.module.dim];
                coords[p] = q().one();
                let acted = crate::matrix::row_times_matrix(&coords, &h.module.action[j]);
                let expected = s_left[j].mul(&h.basis[p]);
                let via_basis = h.coords_of(&expected).unwrap();
                assert_eq!(acted, via_basis);
            }
        }
    }
}
