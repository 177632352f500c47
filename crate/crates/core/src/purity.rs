//! Purity of iterated derived tensor powers, bounded-evidence stabilization,
//! and the two-dimensional RHom purity criterion.
//!
//! σᵏ as a complex is pure when its cohomology sits in degree 0; degreewise
//! that reduces to the vanishing of Tor against σ at each stage. Every
//! verdict here is bounded evidence: the bounds travel with the report.

use crate::error::Error;
use crate::derived::{ext_dim, tor_with_resolution};
use crate::module::Module;
use crate::resolution::{global_dimension, minimal_resolution, GlobalDimension};
use crate::tensor::tensor_over;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurityWitness {
    /// tensor stage at which purity failed
    pub stage: usize,
    /// Tor index with the first nonzero value
    pub index: usize,
    /// dimension of that Tor
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct PurityStage {
    pub stage: usize,
    /// dimension of the underived power σ^stage
    pub dim: usize,
    pub pure: bool,
    pub witness: Option<PurityWitness>,
}

/// Check σᵏ pure for k = 1..=n_max: σ¹ is a module, and each further stage
/// is pure iff the previous one is and tor(σᵏ⁻¹, σ, i) = 0 for
/// 1 ≤ i ≤ gldim_bound. Stops at the first failure, reporting its witness.
pub fn purity_power(
    s: &Module,
    n_max: usize,
    gldim_bound: usize,
) -> Result<Vec<PurityStage>, Error> {
    if n_max < 1 {
        return Err(Error::Validation("n_max must be at least 1".into()));
    }
    s.left_matrices()?;
    let mut stages = vec![PurityStage {
        stage: 1,
        dim: s.dim,
        pure: true,
        witness: None,
    }];
    let mut power = s.clone();
    for k in 2..=n_max {
        let res = minimal_resolution(&power, gldim_bound + 1)?;
        let mut witness = None;
        for i in 1..=gldim_bound {
            let t = tor_with_resolution(&res, s, i)?;
            if t.dim != 0 {
                witness = Some(PurityWitness {
                    stage: k,
                    index: i,
                    dim: t.dim,
                });
                break;
            }
        }
        power = tensor_over(&power, s)?.module;
        let pure = witness.is_none();
        stages.push(PurityStage {
            stage: k,
            dim: power.dim,
            pure,
            witness,
        });
        if !pure {
            break;
        }
    }
    Ok(stages)
}

#[derive(Debug, Clone)]
pub struct TowerCheck {
    /// number of σ factors already applied to m
    pub stage: usize,
    pub dim: usize,
    pub pure: bool,
    pub witness: Option<PurityWitness>,
}

#[derive(Debug, Clone)]
pub struct StabilizationReport {
    pub m_max: usize,
    pub n_max: usize,
    pub gldim_bound: usize,
    /// purity evidence for the powers of σ themselves
    pub power_stages: Vec<PurityStage>,
    pub powers_all_pure: bool,
    /// Tor checks along m, m⊗σ, m⊗σ², …
    pub tower_checks: Vec<TowerCheck>,
    /// least m₀ ≤ m_max whose whole window m₀..=m₀+n_max is pure
    pub m0: Option<usize>,
}

/// Search for the least m₀ such that every (m ⊗ σ^{m₀}) ⊗ σⁿ stage up to
/// n_max has vanishing Tor against σ. The σ-power purity that the clean
/// reading requires is recorded as evidence, not enforced as a gate.
pub fn purity_stabilization(
    m: &Module,
    s: &Module,
    m_max: usize,
    n_max: usize,
    gldim_bound: usize,
) -> Result<StabilizationReport, Error> {
    let power_stages = purity_power(s, (m_max + n_max).max(1), gldim_bound)?;
    let powers_all_pure = power_stages.iter().all(|st| st.pure);

    let mut tower_checks = Vec::with_capacity(m_max + n_max + 1);
    let mut stage_mod = m.clone();
    for j in 0..=(m_max + n_max) {
        let res = minimal_resolution(&stage_mod, gldim_bound + 1)?;
        let mut witness = None;
        for i in 1..=gldim_bound {
            let t = tor_with_resolution(&res, s, i)?;
            if t.dim != 0 {
                witness = Some(PurityWitness {
                    stage: j,
                    index: i,
                    dim: t.dim,
                });
                break;
            }
        }
        tower_checks.push(TowerCheck {
            stage: j,
            dim: stage_mod.dim,
            pure: witness.is_none(),
            witness,
        });
        if j < m_max + n_max {
            stage_mod = tensor_over(&stage_mod, s)?.module;
        }
    }
    let m0 = (0..=m_max).find(|&m0| {
        tower_checks[m0..=m0 + n_max].iter().all(|c| c.pure)
    });
    Ok(StabilizationReport {
        m_max,
        n_max,
        gldim_bound,
        power_stages,
        powers_all_pure,
        tower_checks,
        m0,
    })
}

#[derive(Debug, Clone)]
pub struct RhomPurityReport {
    pub gldim: GlobalDimension,
    /// dims of Extⁱ(σ, σ) for i = 1, 2 (the verified hypothesis)
    pub self_ext_dims: [usize; 2],
    /// dims of Extⁱ(σ, m⊗σ) for i = 1, 2
    pub ext_dims: [usize; 2],
    pub pure: bool,
}

/// Over an algebra of global dimension ≤ 2 with Ext^{1,2}(σ, σ) = 0, the
/// groups Extⁱ(σ, M⊗σ) must vanish for i = 1, 2 and every finitely
/// presented M; a nonzero value is a counterexample alert. A violated
/// precondition is an error, not a counterexample.
pub fn rhom_purity_2dim(
    s: &Module,
    m: &Module,
    gldim_bound: usize,
) -> Result<RhomPurityReport, Error> {
    s.left_matrices()?;
    let a = &s.algebra;
    let gldim = global_dimension(a, gldim_bound.max(2))?;
    match gldim {
        GlobalDimension::Exact(d) if d <= 2 => {}
        ref g => {
            return Err(Error::HypothesisNotSatisfied(format!(
                "global dimension {g} exceeds 2"
            )))
        }
    }
    let self_ext = [ext_dim(s, s, 1)?, ext_dim(s, s, 2)?];
    for (i, d) in self_ext.iter().enumerate() {
        if *d != 0 {
            return Err(Error::HypothesisNotSatisfied(format!(
                "Ext^{}(sigma, sigma) has dimension {d}",
                i + 1
            )));
        }
    }
    let ms = tensor_over(m, s)?.module;
    let ext_dims = [ext_dim(s, &ms, 1)?, ext_dim(s, &ms, 2)?];
    let pure = ext_dims == [0, 0];
    Ok(RhomPurityReport {
        gldim,
        self_ext_dims: self_ext,
        ext_dims,
        pure,
    })
}
