//! Tensor products over the base algebra, with canonical coordinates and
//! induced actions.
//!
//! X ⊗_A S is realized as the quotient of X ⊗_k S by the balancing relations
//! x·a ⊗ t − x ⊗ a·t. Coordinates come from `quotient_coords`, so the chosen
//! basis of the quotient is the set of non-pivot pure tensors eᵤ⊗eᵥ; every
//! induced structure map is "lift to a pure tensor, act, project".

use crate::error::Error;
use crate::matrix::{Matrix, RrefBuilder, Subspace, Vector};
use crate::module::Module;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct TensorProduct {
    /// the quotient with its induced right action (and left action when the
    /// first factor is a bimodule)
    pub module: Module,
    /// big-space dimensions (dim X, dim S)
    pub factors: (usize, usize),
    /// projection (dim X · dim S) × dim of the quotient
    pub qmap: Matrix,
    /// balancing relation span, for membership queries
    pub relations: Subspace,
}

impl TensorProduct {
    /// Index of the pure tensor eᵤ⊗eᵥ in the flattened big space.
    #[inline]
    pub fn flat(&self, u: usize, v: usize) -> usize {
        u * self.factors.1 + v
    }

    /// Quotient coordinates of a pure tensor of arbitrary vectors.
    pub fn pure(&self, x: &[Scalar], t: &[Scalar]) -> Vector {
        let f = self.module.algebra.field;
        let ds = self.factors.1;
        let mut big = vec![f.zero(); x.len() * ds];
        for (u, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (v, b) in t.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                big[u * ds + v] = f.mul(a, b);
            }
        }
        crate::matrix::row_times_matrix(&big, &self.qmap)
    }

    /// The map X⊗S → Y⊗S induced by a module map X → Y (same second factor
    /// built against the same bimodule).
    pub fn induce_left(&self, target: &TensorProduct, f_mat: &Matrix) -> Matrix {
        let f = self.module.algebra.field;
        let ds = self.factors.1;
        assert_eq!(target.factors.1, ds, "second factors differ");
        let comp = self.relations.complement_cols();
        let mut out = Matrix::zero(f, self.module.dim, target.module.dim);
        for (row, &flat) in comp.iter().enumerate() {
            let (u, v) = (flat / ds, flat % ds);
            // eᵤ⊗eᵥ ↦ (eᵤ·F)⊗eᵥ
            let fu = f_mat.row(u);
            let mut big = vec![f.zero(); target.factors.0 * ds];
            for (u2, a) in fu.iter().enumerate() {
                if !f.is_zero(a) {
                    big[u2 * ds + v] = a.clone();
                }
            }
            out.set_row(row, &crate::matrix::row_times_matrix(&big, &target.qmap));
        }
        out
    }
}

use crate::field::Scalar;

/// X ⊗_A S for a right module (or bimodule) X and a bimodule S over the same
/// algebra. The right action comes from S, the left action from X when X is
/// a bimodule.
pub fn tensor_over(x: &Module, s: &Module) -> Result<TensorProduct, Error> {
    if !Arc::ptr_eq(&x.algebra, &s.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let s_left = s.left_matrices()?;
    let a = &x.algebra;
    let f = a.field;
    let (dx, ds) = (x.dim, s.dim);
    let ambient = dx * ds;

    let mut builder = RrefBuilder::new(f, ambient);
    for t in 0..a.dim {
        let rho = &x.action[t];
        let lam = &s_left[t];
        for u in 0..dx {
            for v in 0..ds {
                // (eᵤ·a)⊗eᵥ − eᵤ⊗(a·eᵥ)
                let mut row: Vec<(usize, Scalar)> = Vec::new();
                for c in 0..dx {
                    let val = rho.get(u, c);
                    if !f.is_zero(val) {
                        row.push((c * ds + v, val.clone()));
                    }
                }
                for c in 0..ds {
                    let val = lam.get(v, c);
                    if !f.is_zero(val) {
                        let idx = u * ds + c;
                        match row.binary_search_by_key(&idx, |(i, _)| *i) {
                            Ok(pos) => {
                                let merged = f.sub(&row[pos].1, val);
                                if f.is_zero(&merged) {
                                    row.remove(pos);
                                } else {
                                    row[pos].1 = merged;
                                }
                            }
                            Err(pos) => row.insert(pos, (idx, f.neg(val))),
                        }
                    }
                }
                builder.insert_sparse(row);
            }
        }
    }
    let relations = builder.into_subspace();
    let qmap = relations.quotient_matrix();
    let dim = ambient - relations.dim();
    let comp = relations.complement_cols();

    // induced actions: act on the pure-tensor representative, project back
    let induced = |mats: &dyn Fn(usize) -> Matrix| -> Vec<Matrix> {
        (0..a.dim)
            .map(|j| {
                let m = mats(j);
                let mut out = Matrix::zero(f, dim, dim);
                for (row, &flat) in comp.iter().enumerate() {
                    let (u, v) = (flat / ds, flat % ds);
                    let acted = m.row(v);
                    let mut big_row = vec![f.zero(); ambient];
                    for (c, val) in acted.iter().enumerate() {
                        if !f.is_zero(val) {
                            big_row[u * ds + c] = val.clone();
                        }
                    }
                    out.set_row(row, &crate::matrix::row_times_matrix(&big_row, &qmap));
                }
                out
            })
            .collect()
    };
    // right action touches the second factor
    let action = induced(&|j| s.action[j].clone());
    // left action acts on the first factor
    let left_action = x.left_action.as_ref().map(|lx| {
        (0..a.dim)
            .map(|j| {
                let m = &lx[j];
                let mut out = Matrix::zero(f, dim, dim);
                for (row, &flat) in comp.iter().enumerate() {
                    let (u, v) = (flat / ds, flat % ds);
                    let acted = m.row(u);
                    let mut big_row = vec![f.zero(); ambient];
                    for (c, val) in acted.iter().enumerate() {
                        if !f.is_zero(val) {
                            big_row[c * ds + v] = val.clone();
                        }
                    }
                    out.set_row(row, &crate::matrix::row_times_matrix(&big_row, &qmap));
                }
                out
            })
            .collect::<Vec<_>>()
    });

    let module = Module {
        algebra: Arc::clone(a),
        dim,
        action,
        left_action,
    };
    Ok(TensorProduct {
        module,
        factors: (dx, ds),
        qmap,
        relations,
    })
}
