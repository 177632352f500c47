//! Truncated tensor algebras stored as explicit power components σ⁰ = A,
//! σ¹ = σ, σᵏ⁺¹ = σᵏ ⊗_A σ, together with every bilinear multiplication
//! μ: σⁱ × σʲ → σⁱ⁺ʲ below a fixed cap.
//!
//! Powers are left associated. A multiplication matrix acts on flattened
//! pure pairs, so μ(x, y) is the row x ⊗ y times `mult(i, j)`. The maps are
//! filled eagerly by the recursion μ(i, j+1) = μ(i+j, 1) ∘ (μ(i, j) ⊗ id),
//! which is valid because every basis vector of σʲ⁺¹ is a pure pair.

use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{kron, Matrix, Vector};
use crate::module::Module;
use crate::purity::{purity_power, PurityStage};
use crate::tensor::{tensor_over, TensorProduct};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct TensorTower {
    pub algebra: AlgebraRef,
    pub sigma: Module,
    pub cap: usize,
    pub gldim_bound: usize,
    /// components[k] = σᵏ, with σ⁰ the regular bimodule and σ¹ = σ itself
    pub components: Vec<Module>,
    /// steps[k-1] realises σᵏ ⊗ σ ↠ σᵏ⁺¹ for 1 ≤ k < cap
    steps: Vec<TensorProduct>,
    mult: HashMap<(usize, usize), Matrix>,
    pub purity: Vec<PurityStage>,
    pub purity_waived: bool,
}

impl TensorTower {
    pub fn dim(&self, k: usize) -> usize {
        self.components[k].dim
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim).collect()
    }

    pub fn component(&self, k: usize) -> Result<&Module> {
        self.components
            .get(k)
            .ok_or_else(|| Error::Validation(format!("power {k} exceeds cap {}", self.cap)))
    }

    /// Multiplication matrix on flattened pure pairs, shape (dᵢ·dⱼ) × dᵢ₊ⱼ.
    pub fn mult(&self, i: usize, j: usize) -> Result<&Matrix> {
        self.mult
            .get(&(i, j))
            .ok_or_else(|| Error::Validation(format!("power {i}+{j} exceeds cap {}", self.cap)))
    }

    pub fn mult_apply(&self, i: usize, j: usize, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let m = self.mult(i, j)?;
        let f = self.algebra.field;
        let dj = self.dim(j);
        let mut out = vec![f.zero(); m.cols];
        for (p, xv) in x.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
            for (q, yv) in y.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
                let c = f.mul(xv, yv);
                let row = m.row(p * dj + q);
                for (o, r) in out.iter_mut().zip(row) {
                    *o = f.add_mul(o, &c, r);
                }
            }
        }
        Ok(out)
    }

    /// μ(u, e_t) for a vector u ∈ σⁱ and a basis vector t of σʲ.
    pub fn mult_apply_basis(&self, i: usize, j: usize, u: &[Scalar], t: usize) -> Result<Vector> {
        let m = self.mult(i, j)?;
        let f = self.algebra.field;
        let dj = self.dim(j);
        let mut out = vec![f.zero(); m.cols];
        for (p, xv) in u.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
            let row = m.row(p * dj + t);
            for (o, r) in out.iter_mut().zip(row) {
                *o = f.add_mul(o, xv, r);
            }
        }
        Ok(out)
    }

    /// Basis of σʲ (j ≥ 2) as pure pairs (p, t) with p ∈ σʲ⁻¹, t ∈ σ.
    pub fn pair_basis(&self, j: usize) -> Vec<(usize, usize)> {
        let ds = self.sigma.dim;
        self.steps[j - 2]
            .relations
            .complement_cols()
            .iter()
            .map(|&c| (c / ds, c % ds))
            .collect()
    }

    /// Every basis vector of σⁿ (n ≥ 1) unfolds to a pure chain of σ basis
    /// vectors; entry k lists that chain left to right.
    pub fn chain_basis(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        if n == 0 || n > self.cap {
            return Err(Error::Validation(format!(
                "chain basis needs 1 ≤ n ≤ cap, got {n}"
            )));
        }
        let mut chains: Vec<Vec<usize>> = (0..self.sigma.dim).map(|t| vec![t]).collect();
        for j in 2..=n {
            chains = self
                .pair_basis(j)
                .into_iter()
                .map(|(p, t)| {
                    let mut c = chains[p].clone();
                    c.push(t);
                    c
                })
                .collect();
        }
        Ok(chains)
    }

    fn mult_with_sigma_basis(&self, a: usize, v: &[Scalar], t: usize) -> Vector {
        self.mult_apply_basis(a, 1, v, t)
            .expect("single step stays within cap")
    }

    fn fill_mult(&mut self) {
        let f = self.algebra.field;
        let da = self.algebra.dim;
        for i in 0..=self.cap {
            // right unit: (x, u) ↦ x·u
            let di = self.dim(i);
            let rows = (0..di * da)
                .map(|r| self.components[i].action[r % da].row_vec(r / da))
                .collect();
            self.mult.insert((i, 0), Matrix::from_rows(f, di, rows));
        }
        for j in 1..=self.cap {
            // left unit: (u, y) ↦ u·y
            let dj = self.dim(j);
            let left = self.components[j].left_matrices().expect("power is a bimodule");
            let rows = (0..da * dj).map(|r| left[r / dj].row_vec(r % dj)).collect();
            self.mult.insert((0, j), Matrix::from_rows(f, dj, rows));
        }
        for i in 1..self.cap {
            self.mult.insert((i, 1), self.steps[i - 1].qmap.clone());
        }
        for j in 2..self.cap {
            let pairs = self.pair_basis(j);
            let dj = self.dim(j);
            for i in 1..=self.cap - j {
                let prev = &self.mult[&(i, j - 1)];
                let dprev = self.dim(j - 1);
                let mut rows = Vec::with_capacity(self.dim(i) * dj);
                for x in 0..self.dim(i) {
                    for &(p, t) in &pairs {
                        let v = prev.row(x * dprev + p);
                        rows.push(self.mult_with_sigma_basis(i + j - 1, v, t));
                    }
                }
                self.mult
                    .insert((i, j), Matrix::from_rows(f, self.dim(i + j), rows));
            }
        }
    }
}

fn gate_purity(stages: &[PurityStage], waived: bool) -> Result<()> {
    if waived {
        return Ok(());
    }
    if let Some(stage) = stages.iter().find(|st| !st.pure) {
        let w = stage.witness.clone().expect("impure stage carries a witness");
        return Err(Error::PurityFailure {
            stage: w.stage,
            index: w.index,
            dim: w.dim,
        });
    }
    Ok(())
}

pub fn tower(
    algebra: &AlgebraRef,
    sigma: &Module,
    cap: usize,
    gldim_bound: usize,
    waive_purity: bool,
) -> Result<TensorTower> {
    if !Arc::ptr_eq(&sigma.algebra, algebra) {
        return Err(Error::AlgebraMismatch);
    }
    sigma.left_matrices()?;
    let purity = purity_power(sigma, cap.max(1), gldim_bound)?;
    tower_with_ledger(algebra, sigma, cap, gldim_bound, purity, waive_purity)
}

/// Builds the tower around an already-computed purity ledger.
pub(crate) fn tower_with_ledger(
    algebra: &AlgebraRef,
    sigma: &Module,
    cap: usize,
    gldim_bound: usize,
    purity: Vec<PurityStage>,
    waive_purity: bool,
) -> Result<TensorTower> {
    gate_purity(&purity, waive_purity)?;
    let mut components = vec![Module::regular(algebra)];
    let mut steps = Vec::new();
    if cap >= 1 {
        components.push(sigma.clone());
    }
    for k in 1..cap {
        let step = tensor_over(&components[k], sigma)?;
        components.push(step.module.clone());
        steps.push(step);
    }
    let mut t = TensorTower {
        algebra: Arc::clone(algebra),
        sigma: sigma.clone(),
        cap,
        gldim_bound,
        components,
        steps,
        mult: HashMap::new(),
        purity,
        purity_waived: waive_purity,
    };
    t.fill_mult();
    Ok(t)
}

/// Raises the cap, reusing the computed components. The purity ledger is
/// recomputed for the full range and gated unless the tower waived it.
pub fn tower_extend(t: &TensorTower, new_cap: usize) -> Result<TensorTower> {
    if new_cap < t.cap {
        return Err(Error::Validation(format!(
            "new cap {new_cap} is below the current cap {}",
            t.cap
        )));
    }
    if new_cap == t.cap {
        return Ok(t.clone());
    }
    let purity = purity_power(&t.sigma, new_cap, t.gldim_bound)?;
    gate_purity(&purity, t.purity_waived)?;
    let mut components = t.components.clone();
    let mut steps = t.steps.clone();
    if t.cap == 0 {
        components.push(t.sigma.clone());
    }
    while components.len() <= new_cap {
        let step = tensor_over(components.last().unwrap(), &t.sigma)?;
        components.push(step.module.clone());
        steps.push(step);
    }
    let mut ext = TensorTower {
        algebra: Arc::clone(&t.algebra),
        sigma: t.sigma.clone(),
        cap: new_cap,
        gldim_bound: t.gldim_bound,
        components,
        steps,
        mult: HashMap::new(),
        purity,
        purity_waived: t.purity_waived,
    };
    ext.fill_mult();
    Ok(ext)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// A^r with the diagonal bimodule structure
    Free(usize),
    /// A ⊗_k A with outer left and right multiplication
    Bar,
}

pub fn make_instance(kind: InstanceKind, algebra: &AlgebraRef) -> Result<Module> {
    let d = algebra.dim;
    match kind {
        InstanceKind::Free(r) => {
            if r == 0 {
                return Err(Error::Validation("free instance needs rank ≥ 1".into()));
            }
            let eye = Matrix::identity(algebra.field, r);
            let action = (0..d).map(|j| kron(&eye, algebra.right_mult(j))).collect();
            let left = (0..d).map(|j| kron(&eye, algebra.left_mult(j))).collect();
            Module::new(Arc::clone(algebra), r * d, action, Some(left))
        }
        InstanceKind::Bar => {
            let eye = Matrix::identity(algebra.field, d);
            let action = (0..d).map(|j| kron(&eye, algebra.right_mult(j))).collect();
            let left = (0..d).map(|j| kron(algebra.left_mult(j), &eye)).collect();
            Module::new(Arc::clone(algebra), d * d, action, Some(left))
        }
    }
}
