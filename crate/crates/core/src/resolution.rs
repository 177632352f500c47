//! Minimal projective resolutions by iterated projective covers, and the
//! bounded global dimension search built on them.

use crate::algebra::AlgebraRef;
use crate::error::Error;
use crate::matrix::{row_times_matrix, Matrix, Vector};
use crate::module::{projective_sum, Module, ModuleMap, ProjectiveSum};
use std::fmt;

pub struct Resolution {
    /// P⁰, P¹, … ; index k is homological degree k
    pub terms: Vec<ProjectiveSum>,
    /// differentials dᵏ: Pᵏ → Pᵏ⁻¹ for k ≥ 1, stored at index k−1
    pub differentials: Vec<ModuleMap>,
    /// augmentation P⁰ → M
    pub augmentation: ModuleMap,
    /// true when the kernel after the last term vanished
    pub complete: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Projective dimension when the resolution terminated.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        // trailing zero terms would mean the previous kernel was zero; the
        // construction never emits them, so the length is the dimension
        Some(self.length())
    }
}

/// A projective cover of m: the sum ⊕ e_i·A^{dim(top·e_i)} with the lifted
/// surjection. Deterministic: idempotents ascending, RREF rows in order.
pub fn projective_cover(m: &Module) -> Result<(ProjectiveSum, ModuleMap), Error> {
    let a = &m.algebra;
    let f = a.field;
    if m.dim == 0 {
        let p = projective_sum(a, &[]);
        let map = ModuleMap::without_check(0, 0, Matrix::zero(f, 0, 0));
        return Ok((p, map));
    }
    let mrad = a.radical_of_action(m.dim, &m.action)?;
    let (top, proj) = m.quotient_right_only(&mrad)?;
    let mut summands = Vec::new();
    let mut images: Vec<Vector> = Vec::new();
    for (i, e) in a.idempotents.iter().enumerate() {
        let slice = top
            .algebra
            .combine_action(e, &top.action)
            .row_space();
        for r in 0..slice.dim() {
            let t = slice.basis.row_vec(r);
            let x = proj
                .matrix
                .solve_row(&t)
                .expect("projection onto the top is surjective");
            summands.push(i);
            images.push(m.act(&x, e));
        }
    }
    let p = projective_sum(a, &summands);
    let mat = p.map_from_generator_images(m, &images);
    let cover = ModuleMap::new(&p.module, m, mat)?;
    if cover.rank() != m.dim {
        return Err(Error::Validation(
            "projective cover failed to surject; idempotent split is broken".into(),
        ));
    }
    Ok((p, cover))
}

/// Iterated projective covers to homological degree ≤ length_bound, stopping
/// early when a kernel vanishes.
pub fn minimal_resolution(m: &Module, length_bound: usize) -> Result<Resolution, Error> {
    let (p0, augmentation) = projective_cover(m)?;
    let mut terms = vec![p0];
    let mut differentials: Vec<ModuleMap> = Vec::new();
    let mut complete = false;
    let mut last_map_matrix = augmentation.matrix.clone();
    for _ in 0..length_bound {
        let prev = terms.last().unwrap();
        let kernel = last_map_matrix.row_kernel();
        if kernel.dim() == 0 {
            complete = true;
            break;
        }
        let (kmod, embed) = prev.module.submodule(&kernel)?;
        let (pk, cover) = projective_cover(&kmod)?;
        let d = cover.matrix.mul(&embed.matrix);
        let dmap = ModuleMap::new(&pk.module, &prev.module, d)?;
        last_map_matrix = dmap.matrix.clone();
        terms.push(pk);
        differentials.push(dmap);
    }
    if !complete && last_map_matrix.row_kernel().dim() == 0 {
        complete = true;
    }
    Ok(Resolution {
        terms,
        differentials,
        augmentation,
        complete,
    })
}

impl Module {
    /// Quotient checking only right invariance; used where a bimodule is
    /// quotiented by a merely right-invariant subspace and the left action is
    /// intentionally dropped.
    pub(crate) fn quotient_right_only(
        &self,
        sub: &crate::matrix::Subspace,
    ) -> Result<(Module, ModuleMap), Error> {
        let stripped = Module {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.clone(),
            left_action: None,
        };
        stripped.quotient(sub)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalDimension {
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for GlobalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalDimension::Exact(d) => write!(f, "{d}"),
            GlobalDimension::AtLeast(d) => write!(f, "at least {d}"),
        }
    }
}

/// Maximum projective dimension over the simple right modules, searched to
/// the bound; an incomplete resolution yields the honest lower-bound verdict.
pub fn global_dimension(a: &AlgebraRef, bound: usize) -> Result<GlobalDimension, Error> {
    let mut max = 0usize;
    for i in 0..a.idempotents.len() {
        let s = crate::module::simple_top(a, i)?;
        let res = minimal_resolution(&s, bound)?;
        match res.projective_dimension() {
            Some(d) => max = max.max(d),
            None => return Ok(GlobalDimension::AtLeast(bound + 1)),
        }
    }
    Ok(GlobalDimension::Exact(max))
}

/// Lift a right-module endomorphism g of m to a chain map over its minimal
/// resolution: matrices gᵏ on each term with gᵏ·dᵏ = dᵏ·gᵏ⁻¹ (g⁻¹ read as g
/// through the augmentation). Each gᵏ sends the generator of a summand
/// e_c·A into the same idempotent slice, which pins the whole block.
/// The lift is not unique; passing an rng perturbs every generator choice by
/// a random kernel element so callers can test lift independence.
pub fn lift_endomorphism(
    res: &Resolution,
    g: &Matrix,
    mut rng: Option<&mut rand_chacha::ChaCha8Rng>,
) -> Vec<Matrix> {
    let mut lifts: Vec<Matrix> = Vec::with_capacity(res.terms.len());
    for k in 0..res.terms.len() {
        let p = &res.terms[k];
        let a = &p.module.algebra;
        let f = a.field;
        let compose = if k == 0 {
            &res.augmentation.matrix
        } else {
            &res.differentials[k - 1].matrix
        };
        let prev: &Matrix = if k == 0 { g } else { &lifts[k - 1] };
        let mut images: Vec<Vector> = Vec::with_capacity(p.summands.len());
        for (s, &c) in p.summands.iter().enumerate() {
            let t = row_times_matrix(&row_times_matrix(&p.gen_coords[s], compose), prev);
            // solve y·compose = t with y constrained to Pᵏ·e_c
            let slice = a
                .combine_action(&a.idempotents[c], &p.module.action)
                .row_space();
            let restricted = slice.basis.mul(compose);
            let z = restricted
                .solve_row(&t)
                .expect("chain lift target lies in the image of the slice");
            let mut y = row_times_matrix(&z, &slice.basis);
            if let Some(r) = rng.as_deref_mut() {
                let ker = restricted.row_kernel();
                if ker.dim() > 0 {
                    let coeffs: Vector = (0..ker.dim()).map(|_| f.random_small(r)).collect();
                    let extra = row_times_matrix(
                        &row_times_matrix(&coeffs, &ker.basis),
                        &slice.basis,
                    );
                    y = crate::matrix::add_rows(f, &y, &extra);
                }
            }
            images.push(y);
        }
        lifts.push(p.map_from_generator_images(&p.module, &images));
    }
    lifts
}
