//! Tor and Ext of modules, with the actions the derived functors inherit.
//!
//! Both are computed from a minimal resolution P• of the first argument.
//! Because every term is a sum of slices e_c·A, the functors collapse
//! termwise: P ⊗_A S is the sum of the left slices e_c·S and Hom_A(P, Y)
//! the sum of the right slices Y·e_c. All chain-level maps are assembled
//! from those slice coordinates, never from the generic quotient spaces.

use crate::error::Error;
use crate::field::Scalar;
use crate::matrix::{row_times_matrix, Matrix, Subspace, Vector};
use crate::module::{Module, ProjectiveSum};
use crate::resolution::{lift_endomorphism, minimal_resolution, Resolution};
use std::sync::Arc;

/// One slice subspace of the bimodule per generator of a projective sum.
pub(crate) struct SlicePresentation {
    pub slices: Vec<Subspace>,
    pub offsets: Vec<usize>,
    pub dim: usize,
}

impl SlicePresentation {
    fn build(slices: Vec<Subspace>) -> Self {
        let mut offsets = Vec::with_capacity(slices.len());
        let mut dim = 0;
        for s in &slices {
            offsets.push(dim);
            dim += s.dim();
        }
        SlicePresentation {
            slices,
            offsets,
            dim,
        }
    }

    /// ⊕ e_{c_g}·S, the tensor product of the sum with a bimodule S.
    fn tensor(p: &ProjectiveSum, s_left: &[Matrix]) -> Self {
        let a = &p.module.algebra;
        Self::build(
            p.summands
                .iter()
                .map(|&c| {
                    a.combine_action(&a.idempotents[c], s_left)
                        .row_space()
                })
                .collect(),
        )
    }

    /// ⊕ Y·e_{c_g}, the maps from the sum into Y.
    fn hom(p: &ProjectiveSum, y: &Module) -> Self {
        let a = &p.module.algebra;
        Self::build(
            p.summands
                .iter()
                .map(|&c| {
                    a.combine_action(&a.idempotents[c], &y.action)
                        .row_space()
                })
                .collect(),
        )
    }

    /// Action matrices that act slice-by-slice through `mats` on the carrier.
    fn block_action(&self, field: crate::field::FieldSpec, mats: &[Matrix]) -> Vec<Matrix> {
        mats.iter()
            .map(|m| {
                let mut out = Matrix::zero(field, self.dim, self.dim);
                for (g, slice) in self.slices.iter().enumerate() {
                    for b in 0..slice.dim() {
                        let img = row_times_matrix(slice.basis.row(b), m);
                        let coords = slice
                            .coords_of(&img)
                            .expect("slice closed under the commuting action");
                        for (c, v) in coords.iter().enumerate() {
                            out.set(self.offsets[g] + b, self.offsets[g] + c, v.clone());
                        }
                    }
                }
                out
            })
            .collect()
    }
}

/// Matrix of φ ⊗ id_S in slice coordinates, for φ: P → P' between
/// projective sums given on their bases.
fn tensor_diff(
    p_from: &ProjectiveSum,
    pres_from: &SlicePresentation,
    p_to: &ProjectiveSum,
    pres_to: &SlicePresentation,
    phi: &Matrix,
    s: &Module,
) -> Matrix {
    let a = &p_from.module.algebra;
    let f = a.field;
    let s_left = s.left_matrices().expect("bimodule required");
    let mut out = Matrix::zero(f, pres_from.dim, pres_to.dim);
    for (g, slice) in pres_from.slices.iter().enumerate() {
        let w = row_times_matrix(&p_from.gen_coords[g], phi);
        // φ(gen_g) = Σ_h gen_h·u_h with u_h an algebra element per target
        // generator; then gen_g ⊗ t ↦ Σ_h gen_h ⊗ u_h·t
        let parts: Vec<Vector> = (0..p_to.summands.len())
            .map(|h| {
                let mut u = vec![f.zero(); a.dim];
                for r in p_to.summand_range(h) {
                    if !f.is_zero(&w[r]) {
                        for (c, e) in p_to.elems[r].iter().enumerate() {
                            u[c] = f.add_mul(&u[c], &w[r], e);
                        }
                    }
                }
                u
            })
            .collect();
        for b in 0..slice.dim() {
            let t = slice.basis.row(b);
            let mut row = vec![f.zero(); pres_to.dim];
            for (h, u) in parts.iter().enumerate() {
                if u.iter().all(|c| f.is_zero(c)) {
                    continue;
                }
                let val = row_times_matrix(t, &a.combine_action(u, s_left));
                let coords = pres_to.slices[h]
                    .coords_of(&val)
                    .expect("image lies in the target slice");
                for (c, v) in coords.into_iter().enumerate() {
                    row[pres_to.offsets[h] + c] = v;
                }
            }
            out.set_row(pres_from.offsets[g] + b, &row);
        }
    }
    out
}

/// Matrix of Hom(φ, Y): Hom(P, Y) → Hom(P', Y) for φ: P' → P.
fn hom_diff(
    p_from: &ProjectiveSum,
    pres_from: &SlicePresentation,
    p_to: &ProjectiveSum,
    pres_to: &SlicePresentation,
    phi: &Matrix,
    y: &Module,
) -> Matrix {
    let a = &p_from.module.algebra;
    let f = a.field;
    let mut out = Matrix::zero(f, pres_from.dim, pres_to.dim);
    // φ(gen'_l) restricted to summand g of P, as one algebra element each
    let restricted: Vec<Vec<Vector>> = (0..p_to.summands.len())
        .map(|l| {
            let w = row_times_matrix(&p_to.gen_coords[l], phi);
            (0..p_from.summands.len())
                .map(|g| {
                    let mut u = vec![f.zero(); a.dim];
                    for r in p_from.summand_range(g) {
                        if !f.is_zero(&w[r]) {
                            for (c, e) in p_from.elems[r].iter().enumerate() {
                                u[c] = f.add_mul(&u[c], &w[r], e);
                            }
                        }
                    }
                    u
                })
                .collect()
        })
        .collect();
    for (g, slice) in pres_from.slices.iter().enumerate() {
        for b in 0..slice.dim() {
            let yv = slice.basis.row(b);
            let mut row = vec![f.zero(); pres_to.dim];
            for l in 0..p_to.summands.len() {
                let u = &restricted[l][g];
                if u.iter().all(|c| f.is_zero(c)) {
                    continue;
                }
                let val = row_times_matrix(yv, &a.combine_action(u, &y.action));
                let coords = pres_to.slices[l]
                    .coords_of(&val)
                    .expect("evaluation lies in the target slice");
                for (c, v) in coords.into_iter().enumerate() {
                    row[pres_to.offsets[l] + c] = v;
                }
            }
            out.set_row(pres_from.offsets[g] + b, &row);
        }
    }
    out
}

/// A subquotient Z/B of a coordinate space, with induced maps.
pub(crate) struct Subquotient {
    z: Subspace,
    proj: Matrix,
    comp: Vec<usize>,
    pub dim: usize,
}

impl Subquotient {
    pub fn new(z: Subspace, b: &Subspace) -> Self {
        let f = z.field();
        let rows: Vec<Vector> = (0..b.dim())
            .map(|r| {
                z.coords_of(b.basis.row(r))
                    .expect("boundaries lie inside cycles")
            })
            .collect();
        let bz = Subspace::from_rows(f, z.dim(), rows);
        let proj = bz.quotient_matrix();
        let comp = bz.complement_cols();
        let dim = z.dim() - bz.dim();
        Subquotient {
            z,
            proj,
            comp,
            dim,
        }
    }

    /// Ambient representative of the j-th basis class.
    pub fn rep(&self, j: usize) -> Vector {
        self.z.basis.row_vec(self.comp[j])
    }

    /// Class of an ambient vector; None if it is not a cycle.
    pub fn project(&self, v: &[Scalar]) -> Option<Vector> {
        let zc = self.z.coords_of(v)?;
        Some(row_times_matrix(&zc, &self.proj))
    }

    /// The map the ambient operator v ↦ v·t induces on classes.
    pub fn induced(&self, t: &Matrix) -> Matrix {
        let f = self.z.field();
        let mut out = Matrix::zero(f, self.dim, self.dim);
        for j in 0..self.dim {
            let img = row_times_matrix(&self.rep(j), t);
            let coords = self
                .project(&img)
                .expect("operator preserves the subquotient");
            out.set_row(j, &coords);
        }
        out
    }
}

/// Tor_i(M, S) from an already computed resolution of M. Fails with an
/// honest error when the resolution is incomplete and too short to settle
/// position i.
pub fn tor_with_resolution(res: &Resolution, s: &Module, i: usize) -> Result<Module, Error> {
    let x0 = &res.terms[0].module;
    if !Arc::ptr_eq(&x0.algebra, &s.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let s_left = s.left_matrices()?.clone();
    let a = &x0.algebra;
    let f = a.field;
    let len = res.length();
    if !res.complete && i + 1 > len {
        return Err(Error::UndeterminedBeyondBound {
            needed: i,
            computed: len,
        });
    }
    if i > len {
        return Ok(Module::zero(Arc::clone(a), false));
    }
    let pres_i = SlicePresentation::tensor(&res.terms[i], &s_left);
    let z = if i == 0 {
        Subspace::full(f, pres_i.dim)
    } else {
        let pres_prev = SlicePresentation::tensor(&res.terms[i - 1], &s_left);
        tensor_diff(
            &res.terms[i],
            &pres_i,
            &res.terms[i - 1],
            &pres_prev,
            &res.differentials[i - 1].matrix,
            s,
        )
        .row_kernel()
    };
    let b = if i + 1 <= len {
        let pres_next = SlicePresentation::tensor(&res.terms[i + 1], &s_left);
        tensor_diff(
            &res.terms[i + 1],
            &pres_next,
            &res.terms[i],
            &pres_i,
            &res.differentials[i].matrix,
            s,
        )
        .row_space()
    } else {
        Subspace::zero(f, pres_i.dim)
    };
    let sq = Subquotient::new(z, &b);
    let blocks = pres_i.block_action(f, &s.action);
    let action = blocks.iter().map(|t| sq.induced(t)).collect();
    Module::new(Arc::clone(a), sq.dim, action, None)
}

/// Tor_i(M, S), resolving M just far enough.
pub fn tor(m: &Module, s: &Module, i: usize) -> Result<Module, Error> {
    let res = minimal_resolution(m, i + 1)?;
    tor_with_resolution(&res, s, i)
}

/// The cohomology of Hom(P•, Y) at position i in slice coordinates, with
/// the resolution and presentation needed to induce actions on it. None
/// when the resolution has honestly terminated before i.
fn ext_parts(
    x: &Module,
    y: &Module,
    i: usize,
) -> Result<Option<(Resolution, SlicePresentation, Subquotient)>, Error> {
    if !Arc::ptr_eq(&x.algebra, &y.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let a = &x.algebra;
    let f = a.field;
    let res = minimal_resolution(x, i + 1)?;
    let len = res.length();
    if i > len {
        return Ok(None);
    }
    let pres_i = SlicePresentation::hom(&res.terms[i], y);
    let z = if i + 1 <= len {
        let pres_next = SlicePresentation::hom(&res.terms[i + 1], y);
        hom_diff(
            &res.terms[i],
            &pres_i,
            &res.terms[i + 1],
            &pres_next,
            &res.differentials[i].matrix,
            y,
        )
        .row_kernel()
    } else {
        Subspace::full(f, pres_i.dim)
    };
    let b = if i > 0 {
        let pres_prev = SlicePresentation::hom(&res.terms[i - 1], y);
        hom_diff(
            &res.terms[i - 1],
            &pres_prev,
            &res.terms[i],
            &pres_i,
            &res.differentials[i - 1].matrix,
            y,
        )
        .row_space()
    } else {
        Subspace::zero(f, pres_i.dim)
    };
    let sq = Subquotient::new(z, &b);
    Ok(Some((res, pres_i, sq)))
}

/// dim Extⁱ(X, Y) of right modules, without any induced action.
pub fn ext_dim(x: &Module, y: &Module, i: usize) -> Result<usize, Error> {
    Ok(ext_parts(x, y, i)?.map_or(0, |(_, _, sq)| sq.dim))
}

/// Extⁱ(X, Y) of the underlying right modules, as a bimodule: Y's left
/// action post-composes, and X's left action induces the right action
/// through chain lifts over the resolution of X.
pub fn ext_bimodule(x: &Module, y: &Module, i: usize) -> Result<Module, Error> {
    let x_left = x.left_matrices()?.clone();
    let y_left = y.left_matrices()?.clone();
    let a = &x.algebra;
    let f = a.field;
    let Some((res, pres_i, sq)) = ext_parts(x, y, i)? else {
        return Ok(Module::zero(Arc::clone(a), true));
    };
    // right action: f ↦ f ∘ (chain lift of left-multiplication on X)
    let action: Vec<Matrix> = (0..a.dim)
        .map(|j| {
            let lifts = lift_endomorphism(&res, &x_left[j], None);
            let t = hom_diff(
                &res.terms[i],
                &pres_i,
                &res.terms[i],
                &pres_i,
                &lifts[i],
                y,
            );
            sq.induced(&t)
        })
        .collect();
    // left action: post-compose with Y's left action, slice by slice
    let left_blocks = pres_i.block_action(f, &y_left);
    let left_action: Vec<Matrix> = left_blocks.iter().map(|t| sq.induced(t)).collect();
    Module::new(Arc::clone(a), sq.dim, action, Some(left_action))
}
