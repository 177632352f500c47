//! Higher translates built from a concentrated Ext bimodule.
//!
//! For an algebra of finite global dimension the bimodule
//! θ = Extⁿ(D(A), A) induces the translate functor τ := − ⊗ θ and its
//! adjoint τ⁻ := Hom(θ, −). Powers of θ assemble into a tensor tower whose
//! degree parts play the role of the higher preprojective slices, and every
//! module carries a ladder of unit maps
//! Hom(θˢ, M⊗θˢ) → Hom(θˢ⁺¹, M⊗θˢ⁺¹) whose eventual invertibility is the
//! stabilization this module measures.
//!
//! The ladder is never computed on the raw hom spaces of θˢ: each rung is
//! pushed through the adjunction Hom(X⊗θ, −) ≅ Hom(X, Hom(θ, −)) so that
//! every linear-algebra step solves maps out of θ itself. The tests compare
//! small instances against the direct hom computation.

use crate::algebra::AlgebraRef;
use crate::derived::{ext_bimodule, ext_dim};
use crate::error::Error;
use crate::graded::{module_tensor_tower, TowerRef};
use crate::homspace::{hom_over, HomSpace};
use crate::matrix::Matrix;
use crate::module::{Module, ModuleMap};
use crate::resolution::{global_dimension, GlobalDimension};
use crate::tensor::tensor_over;
use crate::tower::tower;
use std::sync::Arc;

type Result<T> = std::result::Result<T, Error>;

/// The translate bimodule θ = Extⁿ(D(A), A) together with the vanishing
/// record certifying that Ext is concentrated in degree n. The record is
/// filled before the bimodule is ever handed out, so every consumer of a
/// `ThetaData` works with a validated θ.
#[derive(Debug, Clone)]
pub struct ThetaData {
    pub algebra: AlgebraRef,
    /// the Ext degree the bimodule lives in
    pub n: usize,
    /// Extⁿ(D(A), A) with both actions
    pub theta: Module,
    /// verified global dimension of the algebra
    pub gldim: usize,
    /// (i, dim Extⁱ(D(A), A)) for every 0 ≤ i ≤ gldim
    pub validation: Vec<(usize, usize)>,
}

/// Builds θ = Extⁿ(D(A), A) after checking that the global dimension is
/// settled within `bound` and that Ext(D(A), A) vanishes in every degree
/// other than n.
pub fn build_theta(a: &AlgebraRef, n: usize, bound: usize) -> Result<ThetaData> {
    let gldim = match global_dimension(a, bound)? {
        GlobalDimension::Exact(d) => d,
        GlobalDimension::AtLeast(d) => {
            return Err(Error::Validation(format!(
                "global dimension not settled within bound {bound}: at least {d}"
            )))
        }
    };
    let dual = Module::dual_regular(a);
    let reg = Module::regular(a);
    let mut validation = Vec::with_capacity(gldim + 1);
    for i in 0..=gldim {
        let dim = ext_dim(&dual, &reg, i)?;
        if i != n && dim != 0 {
            return Err(Error::ThetaNotConcentrated { index: i, dim, n });
        }
        validation.push((i, dim));
    }
    let theta = ext_bimodule(&dual, &reg, n)?;
    Ok(ThetaData {
        algebra: Arc::clone(a),
        n,
        theta,
        gldim,
        validation,
    })
}

/// The tensor tower of a validated θ up to a cap, with its dimension table.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub tower: TowerRef,
    /// dim θˢ for 0 ≤ s ≤ cap
    pub dims: Vec<usize>,
    /// the Ext degree θ came from
    pub n: usize,
}

/// Truncates the tensor algebra of θ at the cap. Purity of θ is gated
/// inside the tower construction and reported with its witness stage.
pub fn preprojective_truncation(t: &ThetaData, cap: usize) -> Result<Truncation> {
    debug_assert!(!t.validation.is_empty(), "θ used before validation");
    let tw = tower(&t.algebra, &t.theta, cap, t.gldim.max(1), false)?;
    let dims = tw.dims();
    Ok(Truncation {
        tower: Arc::new(tw),
        dims,
        n: t.n,
    })
}

/// One application of the translate and its adjoint at a module, with the
/// unit of the adjunction as an explicit map.
#[derive(Debug, Clone)]
pub struct TauPair {
    /// m ⊗ θ
    pub tau: Module,
    /// Hom(θ, m)
    pub tau_minus: Module,
    /// m → Hom(θ, m⊗θ), x ↦ [t ↦ x⊗t]
    pub unit: ModuleMap,
}

pub fn tau_pair(t: &ThetaData, m: &Module) -> Result<TauPair> {
    debug_assert!(!t.validation.is_empty(), "θ used before validation");
    if !Arc::ptr_eq(&m.algebra, &t.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let prod = tensor_over(m, &t.theta)?;
    let tau_minus = hom_over(&t.theta, m)?.module;
    let target = hom_over(&t.theta, &prod.module)?;
    let unit = mu_adjoint(m, t.theta.dim, &prod.qmap, &target)?;
    Ok(TauPair {
        tau: prod.module,
        tau_minus,
        unit,
    })
}

/// The adjoint of a balanced multiplication μ: X⊗θ → Y, as the map
/// X → Hom(θ, Y), x ↦ [t ↦ μ(x⊗t)]. `mu` is given on the flattened pure
/// tensors, row x·dim θ + t.
fn mu_adjoint(
    source: &Module,
    theta_dim: usize,
    mu: &Matrix,
    target: &HomSpace,
) -> Result<ModuleMap> {
    let f = source.algebra.field;
    let mut mat = Matrix::zero(f, source.dim, target.module.dim);
    for x in 0..source.dim {
        let mut val = Matrix::zero(f, theta_dim, target.target_dim);
        for t in 0..theta_dim {
            val.set_row(t, mu.row(x * theta_dim + t));
        }
        let coords = target
            .coords_of(&val)
            .expect("the multiplication adjoint lands in the hom space");
        mat.set_row(x, &coords);
    }
    ModuleMap::new(source, &target.module, mat)
}

/// Hom(θ, φ): postcompose the maps of one hom space with φ.
fn hom_functor(src: &HomSpace, tgt: &HomSpace, phi: &Matrix) -> Result<ModuleMap> {
    let f = src.module.algebra.field;
    let mut mat = Matrix::zero(f, src.module.dim, tgt.module.dim);
    for (p, b) in src.basis.iter().enumerate() {
        let coords = tgt
            .coords_of(&b.mul(phi))
            .expect("postcomposition stays a module map");
        mat.set_row(p, &coords);
    }
    ModuleMap::new(&src.module, &tgt.module, mat)
}

/// One rung of the unit ladder: the connecting map
/// Hom(θˢ, m⊗θˢ) → Hom(θˢ⁺¹, m⊗θˢ⁺¹) with its exact rank data.
#[derive(Debug, Clone)]
pub struct EtaStage {
    pub s: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub iso: bool,
    /// the connecting map in the canonical bases of the two hom spaces
    pub map: Matrix,
}

/// Stabilization record of the unit ladder of one module.
#[derive(Debug, Clone)]
pub struct EtaReport {
    pub module_dim: usize,
    pub s_max: usize,
    /// dim Hom(θˢ, m⊗θˢ) for 0 ≤ s ≤ s_max
    pub hom_dims: Vec<usize>,
    /// connecting maps for 0 ≤ s < s_max
    pub stages: Vec<EtaStage>,
    /// least s₀ with every connecting map from s₀ on an isomorphism, if the
    /// last checked map already is one
    pub stabilized: Option<usize>,
    /// the functor the ladder iterates, by name and by formula
    pub translate_name: String,
    pub translate_formula: String,
}

/// Computes the unit ladder of m through the adjunction: with
/// G := Hom(θ, −) and M_s := m⊗θˢ, the rung s space is Gˢ(M_s) and the
/// connecting map is Gˢ applied to the adjoint M_s → G(M_{s+1}) of the
/// tower multiplication. The ladder itself runs sequentially; parallelism
/// belongs to callers ranging over many modules.
pub fn eta_stabilization(tr: &Truncation, m: &Module, s_max: usize) -> Result<EtaReport> {
    if !Arc::ptr_eq(&m.algebra, &tr.tower.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    if tr.tower.cap < s_max + 1 {
        return Err(Error::Validation(format!(
            "truncation cap {} too small: the ladder to s_max {s_max} needs cap ≥ {}",
            tr.tower.cap,
            s_max + 1
        )));
    }
    let theta = &tr.tower.sigma;
    let mtower = module_tensor_tower(m, &tr.tower, s_max)?;
    // chains[s][k-1] = Gᵏ(M_s); the rung space is the top level
    let mut chains: Vec<Vec<HomSpace>> = Vec::with_capacity(s_max + 1);
    for s in 0..=s_max {
        let mut levels: Vec<HomSpace> = Vec::with_capacity(s);
        for k in 1..=s {
            let prev = if k == 1 {
                &mtower.modules[s]
            } else {
                &levels[k - 2].module
            };
            levels.push(hom_over(theta, prev)?);
        }
        chains.push(levels);
    }
    let hom_dims: Vec<usize> = (0..=s_max)
        .map(|s| {
            if s == 0 {
                mtower.modules[0].dim
            } else {
                chains[s][s - 1].module.dim
            }
        })
        .collect();
    let mut stages = Vec::with_capacity(s_max);
    for s in 0..s_max {
        let mut phi = mu_adjoint(&mtower.modules[s], theta.dim, &mtower.mu[s], &chains[s + 1][0])?;
        for k in 1..=s {
            phi = hom_functor(&chains[s][k - 1], &chains[s + 1][k], &phi.matrix)?;
        }
        let rank = phi.rank();
        stages.push(EtaStage {
            s,
            source_dim: phi.source_dim,
            target_dim: phi.target_dim,
            rank,
            iso: rank == phi.source_dim && rank == phi.target_dim,
            map: phi.matrix,
        });
    }
    let mut run_start = s_max;
    for s in (0..s_max).rev() {
        if stages[s].iso {
            run_start = s;
        } else {
            break;
        }
    }
    let stabilized = if run_start == s_max && s_max > 0 {
        None
    } else {
        Some(run_start)
    };
    Ok(EtaReport {
        module_dim: m.dim,
        s_max,
        hom_dims,
        stages,
        stabilized,
        translate_name: format!("tau_{}", tr.n),
        translate_formula: format!("- (x) Ext^{}(D(A), A)", tr.n),
    })
}
