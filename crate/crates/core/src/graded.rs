//! Graded free modules over a tensor tower, their degree-preserving maps,
//! degreewise kernels and cokernels with μ witnesses, coherence certificates,
//! and minimal graded resolutions by induced projectives.
//!
//! A graded free module ⊕ T(−dᵢ) is stored as its generator degree multiset;
//! its degree-s slice is ⊕ σ^{s−dᵢ}. All slice maps are assembled from the
//! tower's multiplication data, so compatibility squares hold exactly.

use crate::algebra::AlgebraRef;
use crate::derived::tor;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace, Vector};
use crate::module::{simple_top, Module, ModuleMap};
use crate::par::{map_collect, ExecMode};
use crate::purity::{purity_power, PurityStage, PurityWitness};
use crate::resolution::projective_cover;
use crate::tensor::tensor_over;
use crate::tower::TensorTower;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::Arc;

pub type TowerRef = Arc<TensorTower>;

/// Drops the left action: degree slices are plain right modules.
fn right_part(m: &Module) -> Module {
    Module {
        algebra: Arc::clone(&m.algebra),
        dim: m.dim,
        action: m.action.clone(),
        left_action: None,
    }
}

#[derive(Debug, Clone)]
pub struct GradedFreeModule {
    pub tower: TowerRef,
    pub degrees: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(tower: TowerRef, degrees: Vec<i64>) -> Self {
        GradedFreeModule { tower, degrees }
    }

    pub fn p(&self) -> i64 {
        self.degrees.iter().min().copied().unwrap_or(0)
    }

    pub fn q(&self) -> i64 {
        self.degrees.iter().max().copied().unwrap_or(0)
    }

    /// Power of σ contributed by generator i in degree s; None when the
    /// summand is zero, error when the power would exceed the cap.
    fn power(&self, s: i64, i: usize) -> Result<Option<usize>> {
        let d = self.degrees[i];
        if s < d {
            return Ok(None);
        }
        let pw = (s - d) as usize;
        if pw > self.tower.cap {
            return Err(Error::Validation(format!(
                "degree {s} needs power {pw} beyond cap {}",
                self.tower.cap
            )));
        }
        Ok(Some(pw))
    }

    pub fn slice_widths(&self, s: i64) -> Result<Vec<usize>> {
        (0..self.degrees.len())
            .map(|i| Ok(self.power(s, i)?.map_or(0, |pw| self.tower.dim(pw))))
            .collect()
    }

    pub fn slice_dim(&self, s: i64) -> Result<usize> {
        Ok(self.slice_widths(s)?.iter().sum())
    }

    pub fn slice_offsets(&self, s: i64) -> Result<Vec<usize>> {
        let mut off = 0;
        let mut out = Vec::with_capacity(self.degrees.len());
        for w in self.slice_widths(s)? {
            out.push(off);
            off += w;
        }
        Ok(out)
    }

    pub fn slice_module(&self, s: i64) -> Result<Module> {
        let mut parts = Vec::new();
        for i in 0..self.degrees.len() {
            if let Some(pw) = self.power(s, i)? {
                parts.push(right_part(&self.tower.components[pw]));
            }
        }
        if parts.is_empty() {
            return Ok(Module::zero(Arc::clone(&self.tower.algebra), false));
        }
        let refs: Vec<&Module> = parts.iter().collect();
        Ok(Module::direct_sum(&refs))
    }

    /// μ_{P,m,n} on flattened pure pairs, shape (dim P_m · dim σⁿ) × dim P_{m+n}.
    pub fn mu(&self, m: i64, n: usize) -> Result<Matrix> {
        let f = self.tower.algebra.field;
        let dn = self.tower.dim(n);
        let rows_dim = self.slice_dim(m)?;
        let cols = self.slice_dim(m + n as i64)?;
        let tgt_off = self.slice_offsets(m + n as i64)?;
        let mut out = Matrix::zero(f, rows_dim * dn, cols);
        let mut row = 0;
        for i in 0..self.degrees.len() {
            let Some(pw) = self.power(m, i)? else { continue };
            let block = self.tower.mult(pw, n)?;
            for x in 0..self.tower.dim(pw) {
                for w in 0..dn {
                    let src = block.row(x * dn + w);
                    for (c, v) in src.iter().enumerate() {
                        if !f.is_zero(v) {
                            out.set(row, tgt_off[i] + c, v.clone());
                        }
                    }
                    row += 1;
                }
            }
        }
        debug_assert_eq!(row, rows_dim * dn);
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct GradedMap {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    /// entries[j][i] ∈ σ^{dᵢ−dⱼ}; None exactly when the degree difference is
    /// negative
    pub entries: Vec<Vec<Option<Vector>>>,
}

impl GradedMap {
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Option<Vector>>>,
    ) -> Result<Self> {
        if !Arc::ptr_eq(&source.tower, &target.tower) {
            return Err(Error::Validation(
                "source and target live over different towers".into(),
            ));
        }
        if entries.len() != target.degrees.len()
            || entries.iter().any(|r| r.len() != source.degrees.len())
        {
            return Err(Error::Validation("entry table shape mismatch".into()));
        }
        for (j, row) in entries.iter().enumerate() {
            for (i, e) in row.iter().enumerate() {
                let diff = source.degrees[i] - target.degrees[j];
                match e {
                    None => {
                        if diff >= 0 {
                            return Err(Error::Validation(format!(
                                "entry ({j},{i}) must be an element of σ^{diff}"
                            )));
                        }
                    }
                    Some(u) => {
                        if diff < 0 {
                            return Err(Error::Validation(format!(
                                "entry ({j},{i}) has negative degree {diff}"
                            )));
                        }
                        if diff as usize > source.tower.cap {
                            return Err(Error::Validation(format!(
                                "entry ({j},{i}) needs power {diff} beyond cap"
                            )));
                        }
                        if u.len() != source.tower.dim(diff as usize) {
                            return Err(Error::Validation(format!(
                                "entry ({j},{i}) has wrong length for σ^{diff}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(GradedMap {
            source,
            target,
            entries,
        })
    }

    /// Top generator degree over both sides, the proof's q.
    pub fn q(&self) -> i64 {
        self.source.q().max(self.target.q())
    }

    pub fn min_degree(&self) -> i64 {
        self.source.p().min(self.target.p())
    }

    /// The degree-s slice fₛ: Pₛ → Qₛ.
    pub fn slice(&self, s: i64) -> Result<Matrix> {
        let t = &self.source.tower;
        let f = t.algebra.field;
        let rows = self.source.slice_dim(s)?;
        let cols = self.target.slice_dim(s)?;
        let src_off = self.source.slice_offsets(s)?;
        let tgt_off = self.target.slice_offsets(s)?;
        let mut out = Matrix::zero(f, rows, cols);
        for i in 0..self.source.degrees.len() {
            let Some(pwi) = self.source.power(s, i)? else {
                continue;
            };
            for j in 0..self.target.degrees.len() {
                let Some(u) = &self.entries[j][i] else { continue };
                let e = (self.source.degrees[i] - self.target.degrees[j]) as usize;
                for x in 0..t.dim(pwi) {
                    let val = t.mult_apply_basis(e, pwi, u, x)?;
                    for (c, v) in val.into_iter().enumerate() {
                        if !f.is_zero(&v) {
                            let cur = out.get(src_off[i] + x, tgt_off[j] + c).clone();
                            out.set(src_off[i] + x, tgt_off[j] + c, f.add(&cur, &v));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Per-degree right modules X_s together with single-step μ witnesses on
/// flattened pure pairs X_s ⊗ σ → X_{s+1}.
#[derive(Debug, Clone)]
pub struct GradedModuleData {
    pub tower: TowerRef,
    pub min_degree: i64,
    pub modules: Vec<Module>,
    pub mu: Vec<Matrix>,
}

impl GradedModuleData {
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.modules.len() as i64 - 1
    }

    pub fn index_of(&self, s: i64) -> Option<usize> {
        if s < self.min_degree || s > self.max_degree() {
            return None;
        }
        Some((s - self.min_degree) as usize)
    }

    pub fn module_at(&self, s: i64) -> Result<&Module> {
        self.index_of(s)
            .map(|k| &self.modules[k])
            .ok_or_else(|| Error::Validation(format!("degree {s} outside the computed window")))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.modules.iter().all(|m| m.dim == 0)
    }

    /// Composite μ_{X,m,n} on flattened pure pairs via the stored single
    /// steps; n = 0 is the unit identification.
    pub fn mu_matrix(&self, m: i64, n: usize) -> Result<Matrix> {
        let f = self.tower.algebra.field;
        let k = self
            .index_of(m)
            .ok_or_else(|| Error::Validation(format!("degree {m} outside the computed window")))?;
        if self.index_of(m + n as i64).is_none() {
            return Err(Error::Validation(format!(
                "degree {} outside the computed window",
                m + n as i64
            )));
        }
        let xm = &self.modules[k];
        if n == 0 {
            let da = self.tower.algebra.dim;
            let rows = (0..xm.dim * da)
                .map(|r| xm.action[r % da].row_vec(r / da))
                .collect();
            return Ok(Matrix::from_rows(f, xm.dim, rows));
        }
        let mut cur = self.mu[k].clone();
        for j in 2..=n {
            let pairs = self.tower.pair_basis(j);
            let step = &self.mu[k + j - 1];
            let ds = self.tower.sigma.dim;
            let dprev = self.tower.dim(j - 1);
            let mut rows = Vec::with_capacity(xm.dim * self.tower.dim(j));
            for x in 0..xm.dim {
                for &(p, t) in &pairs {
                    let v = cur.row(x * dprev + p);
                    let mut out = vec![f.zero(); step.cols];
                    for (y, c) in v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                        let r = step.row(y * ds + t);
                        for (o, w) in out.iter_mut().zip(r) {
                            *o = f.add_mul(o, c, w);
                        }
                    }
                    rows.push(out);
                }
            }
            cur = Matrix::from_rows(f, step.cols, rows);
        }
        Ok(cur)
    }

    /// Checks that every stored μ step is balanced over the algebra and
    /// right-linear; intended for loaders and small instances.
    pub fn validate(&self) -> Result<()> {
        let a = &self.tower.algebra;
        let f = a.field;
        let sigma = &self.tower.sigma;
        let sl = sigma.left_matrices()?;
        for (k, mu) in self.mu.iter().enumerate() {
            let x = &self.modules[k];
            let y = &self.modules[k + 1];
            let ds = sigma.dim;
            if mu.rows != x.dim * ds || mu.cols != y.dim {
                return Err(Error::Validation(format!(
                    "μ witness {k} has wrong shape"
                )));
            }
            for j in 0..a.dim {
                for p in 0..x.dim {
                    let xa = x.action[j].row(p);
                    for t in 0..ds {
                        // (x·a) ⊗ t
                        let mut lhs = vec![f.zero(); mu.cols];
                        for (pp, c) in xa.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                            let r = mu.row(pp * ds + t);
                            for (o, w) in lhs.iter_mut().zip(r) {
                                *o = f.add_mul(o, c, w);
                            }
                        }
                        // x ⊗ (a·t)
                        let at = sl[j].row(t);
                        let mut rhs = vec![f.zero(); mu.cols];
                        for (tt, c) in at.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                            let r = mu.row(p * ds + tt);
                            for (o, w) in rhs.iter_mut().zip(r) {
                                *o = f.add_mul(o, c, w);
                            }
                        }
                        if lhs != rhs {
                            return Err(Error::Validation(format!(
                                "μ witness {k} is not balanced at algebra index {j}"
                            )));
                        }
                        // right linearity: μ(x ⊗ t·a) = μ(x ⊗ t)·a
                        let ta = sigma.action[j].row(t);
                        let mut bal = vec![f.zero(); mu.cols];
                        for (tt, c) in ta.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                            let r = mu.row(p * ds + tt);
                            for (o, w) in bal.iter_mut().zip(r) {
                                *o = f.add_mul(o, c, w);
                            }
                        }
                        let direct =
                            crate::matrix::row_times_matrix(mu.row(p * ds + t), &y.action[j]);
                        if bal != direct {
                            return Err(Error::Validation(format!(
                                "μ witness {k} is not right-linear at algebra index {j}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The composite μ_{X,m,n}: X_m ⊗ σⁿ → X_{m+n} as an explicit module map
/// whose source is the tensor product module.
pub fn mu_map(x: &GradedModuleData, m: i64, n: usize) -> Result<ModuleMap> {
    let f = x.tower.algebra.field;
    let c = x.mu_matrix(m, n)?;
    let xm = x.module_at(m)?;
    let comp = x.tower.component(n)?;
    let t = tensor_over(xm, comp)?;
    for r in 0..t.relations.dim() {
        let img = crate::matrix::row_times_matrix(t.relations.basis.row(r), &c);
        if img.iter().any(|v| !f.is_zero(v)) {
            return Err(Error::Validation(
                "μ witness does not vanish on the tensor relations".into(),
            ));
        }
    }
    let rows = t
        .relations
        .complement_cols()
        .iter()
        .map(|&col| c.row_vec(col))
        .collect();
    let mat = Matrix::from_rows(f, c.cols, rows);
    ModuleMap::new(&t.module, x.module_at(m + n as i64)?, mat)
}

/// Kernel and cokernel of a graded map through degree `max_degree`, with μ
/// witnesses, graded generators, and the stabilization data that seeds a
/// coherence certificate.
#[derive(Debug, Clone)]
pub struct GradedKernelData {
    pub kernel: GradedModuleData,
    pub cokernel: GradedModuleData,
    /// Kₛ inside the source slice coordinates
    pub kernel_bases: Vec<Subspace>,
    /// Iₛ inside the target slice coordinates
    pub image_bases: Vec<Subspace>,
    /// kernel generators as (degree, vector in the source slice)
    pub generators: Vec<(i64, Vector)>,
    pub kernel_dims: Vec<usize>,
    pub cokernel_dims: Vec<usize>,
    pub min_degree: i64,
    pub max_degree: i64,
    /// least d with μ_{K,s,1} an isomorphism for d ≤ s < max_degree
    pub stabilization: i64,
}

impl GradedKernelData {
    pub fn generator_degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|(s, _)| *s).collect()
    }
}

pub fn graded_kernel(f: &GradedMap, max_degree: i64, mode: ExecMode) -> Result<GradedKernelData> {
    let tower = Arc::clone(&f.source.tower);
    let p = f.min_degree();
    if max_degree < p {
        return Err(Error::Validation(format!(
            "max degree {max_degree} is below the first generator degree {p}"
        )));
    }
    let degrees: Vec<i64> = (p..=max_degree).collect();
    struct SliceData {
        kernel: Subspace,
        image: Subspace,
        kmod: Module,
        cmod: Module,
        proj: ModuleMap,
    }
    let slices: Vec<Result<SliceData>> = map_collect(mode, degrees.clone(), |s| {
        let mat = f.slice(s)?;
        let kernel = mat.row_kernel();
        let image = mat.row_space();
        let pmod = f.source.slice_module(s)?;
        let qmod = f.target.slice_module(s)?;
        let (kmod, _) = pmod.submodule(&kernel)?;
        let (cmod, proj) = qmod.quotient(&image)?;
        Ok(SliceData {
            kernel,
            image,
            kmod,
            cmod,
            proj,
        })
    });
    let slices: Vec<SliceData> = slices.into_iter().collect::<Result<_>>()?;
    let field = tower.algebra.field;
    let ds = tower.sigma.dim;

    let mut mu_k = Vec::new();
    let mut mu_c = Vec::new();
    for (idx, s) in degrees.iter().enumerate().take(degrees.len() - 1) {
        let mu_p = f.source.mu(*s, 1)?;
        let mu_q = f.target.mu(*s, 1)?;
        let cur = &slices[idx];
        let next = &slices[idx + 1];
        let mut krows = Vec::with_capacity(cur.kernel.dim() * ds);
        for k in 0..cur.kernel.dim() {
            let emb = cur.kernel.basis.row(k);
            for v in 0..ds {
                let mut val = vec![field.zero(); mu_p.cols];
                for (pp, c) in emb.iter().enumerate().filter(|(_, c)| !field.is_zero(c)) {
                    let r = mu_p.row(pp * ds + v);
                    for (o, w) in val.iter_mut().zip(r) {
                        *o = field.add_mul(o, c, w);
                    }
                }
                let coords = next
                    .kernel
                    .coords_of(&val)
                    .expect("μ carries kernel slices into kernel slices");
                krows.push(coords);
            }
        }
        mu_k.push(Matrix::from_rows(field, next.kernel.dim(), krows));

        let comp = cur.image.complement_cols();
        let mut crows = Vec::with_capacity(cur.cmod.dim * ds);
        for &rep in &comp {
            for v in 0..ds {
                let val = mu_q.row_vec(rep * ds + v);
                crows.push(next.proj.apply(&val));
            }
        }
        mu_c.push(Matrix::from_rows(field, next.cmod.dim, crows));
    }

    let mut generators = Vec::new();
    for (idx, s) in degrees.iter().enumerate() {
        let kdim = slices[idx].kernel.dim();
        if kdim == 0 {
            continue;
        }
        let reached = if idx == 0 {
            Subspace::zero(field, kdim)
        } else {
            mu_k[idx - 1].row_space()
        };
        for c in reached.complement_cols() {
            generators.push((*s, slices[idx].kernel.basis.row_vec(c)));
        }
    }

    // μ-iso testing: surjectivity plus dimension equality of the tensor
    // product domain
    let mut iso = Vec::new();
    for (idx, _) in degrees.iter().enumerate().take(degrees.len() - 1) {
        let dom = tensor_over(&slices[idx].kmod, &tower.sigma)?.module.dim;
        let tgt = slices[idx + 1].kernel.dim();
        iso.push(mu_k[idx].rank() == tgt && dom == tgt);
    }
    let mut stab = max_degree;
    for (idx, s) in degrees.iter().enumerate().take(degrees.len() - 1).rev() {
        if iso[idx] {
            stab = *s;
        } else {
            break;
        }
    }

    let kernel_dims: Vec<usize> = slices.iter().map(|d| d.kernel.dim()).collect();
    let cokernel_dims: Vec<usize> = slices.iter().map(|d| d.cmod.dim).collect();
    let mut kmods = Vec::new();
    let mut cmods = Vec::new();
    let mut kernel_bases = Vec::new();
    let mut image_bases = Vec::new();
    for d in slices {
        kmods.push(d.kmod);
        cmods.push(d.cmod);
        kernel_bases.push(d.kernel);
        image_bases.push(d.image);
    }
    Ok(GradedKernelData {
        kernel: GradedModuleData {
            tower: Arc::clone(&tower),
            min_degree: p,
            modules: kmods,
            mu: mu_k,
        },
        cokernel: GradedModuleData {
            tower,
            min_degree: p,
            modules: cmods,
            mu: mu_c,
        },
        kernel_bases,
        image_bases,
        generators,
        kernel_dims,
        cokernel_dims,
        min_degree: p,
        max_degree,
        stabilization: stab,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    CertifiedFlatPath,
    BoundedEvidence,
    HypothesisFailure(PurityWitness),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::CertifiedFlatPath => "certified-flat-path",
            Verdict::BoundedEvidence => "bounded-evidence",
            Verdict::HypothesisFailure(_) => "hypothesis-failure",
        }
    }
}

/// One Tor vanishing check Tor_index(C_{q+n}, σ^power).
#[derive(Debug, Clone)]
pub struct TorCheck {
    pub n: usize,
    pub power: usize,
    pub index: usize,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct MapEvidence {
    pub index: usize,
    pub source_degrees: Vec<i64>,
    pub target_degrees: Vec<i64>,
    pub q: i64,
    pub kernel_dims: Vec<usize>,
    pub generator_degrees: Vec<i64>,
    pub stabilization: i64,
    /// least n whose Tor obligations on C_{q+n} all vanished, if any
    pub tor_power: Option<usize>,
    pub tor_checks: Vec<TorCheck>,
}

#[derive(Debug, Clone)]
pub struct SimpleTorCheck {
    pub idempotent: usize,
    pub index: usize,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct CoherenceCertificate {
    pub cap: usize,
    pub gldim_bound: usize,
    pub verdict: Verdict,
    pub purity: Vec<PurityStage>,
    pub flat_evidence: Option<Vec<SimpleTorCheck>>,
    pub seed: Option<u64>,
    pub maps: Vec<MapEvidence>,
}

#[derive(Debug, Clone)]
pub struct CoherenceOptions {
    pub cap: usize,
    pub gldim_bound: usize,
    pub map_count: usize,
    pub max_generators: usize,
    pub degree_low: i64,
    pub degree_high: i64,
    pub seed: u64,
    pub mode: ExecMode,
}

impl CoherenceOptions {
    pub fn new(cap: usize, gldim_bound: usize, map_count: usize, seed: u64) -> Self {
        CoherenceOptions {
            cap,
            gldim_bound,
            map_count,
            max_generators: 3,
            degree_low: 0,
            degree_high: 3,
            seed,
            mode: ExecMode::default(),
        }
    }
}

pub fn random_graded_map(
    tower: &TowerRef,
    rng: &mut ChaCha8Rng,
    max_generators: usize,
    degree_low: i64,
    degree_high: i64,
) -> Result<GradedMap> {
    let f = tower.algebra.field;
    let sample_degrees = |rng: &mut ChaCha8Rng| {
        let count = rng.gen_range(1..=max_generators);
        let mut d: Vec<i64> = (0..count)
            .map(|_| rng.gen_range(degree_low..=degree_high))
            .collect();
        d.sort_unstable();
        d
    };
    let src = sample_degrees(rng);
    let tgt = sample_degrees(rng);
    let mut entries = Vec::with_capacity(tgt.len());
    for &dj in &tgt {
        let mut row = Vec::with_capacity(src.len());
        for &di in &src {
            let e = di - dj;
            if e < 0 || e as usize > tower.cap {
                row.push(None);
            } else {
                let dim = tower.dim(e as usize);
                row.push(Some((0..dim).map(|_| f.random_small(rng)).collect()));
            }
        }
        entries.push(row);
    }
    GradedMap::new(
        GradedFreeModule::new(Arc::clone(tower), src),
        GradedFreeModule::new(Arc::clone(tower), tgt),
        entries,
    )
}

fn map_evidence(
    tower: &TowerRef,
    f: &GradedMap,
    index: usize,
    cap: usize,
    gldim_bound: usize,
) -> Result<MapEvidence> {
    let gk = graded_kernel(f, cap as i64, ExecMode::Sequential)?;
    let q = f.q();
    let mut tor_checks = Vec::new();
    let mut tor_power = None;
    let mut n: usize = 0;
    while q + (n as i64) < cap as i64 {
        let c = gk.cokernel.module_at(q + n as i64)?;
        let max_m = (cap as i64 - q - n as i64) as usize;
        let mut all_zero = true;
        for m in 1..=max_m {
            for i in 1..=gldim_bound {
                let d = tor(c, &tower.components[m], i)?.dim;
                tor_checks.push(TorCheck {
                    n,
                    power: m,
                    index: i,
                    dim: d,
                });
                if d != 0 {
                    all_zero = false;
                }
            }
        }
        if all_zero {
            tor_power = Some(n);
            break;
        }
        n += 1;
    }
    Ok(MapEvidence {
        index,
        source_degrees: f.source.degrees.clone(),
        target_degrees: f.target.degrees.clone(),
        q,
        kernel_dims: gk.kernel_dims.clone(),
        generator_degrees: gk.generator_degrees(),
        stabilization: gk.stabilization,
        tor_power,
        tor_checks,
    })
}

pub fn coherence_check(
    algebra: &AlgebraRef,
    sigma: &Module,
    opts: &CoherenceOptions,
) -> Result<CoherenceCertificate> {
    let stages = purity_power(sigma, opts.cap.max(1), opts.gldim_bound)?;
    if let Some(bad) = stages.iter().find(|st| !st.pure) {
        let w = bad.witness.clone().expect("impure stage carries a witness");
        return Ok(CoherenceCertificate {
            cap: opts.cap,
            gldim_bound: opts.gldim_bound,
            verdict: Verdict::HypothesisFailure(w),
            purity: stages,
            flat_evidence: None,
            seed: None,
            maps: Vec::new(),
        });
    }

    let mut flat = Vec::new();
    let mut all_zero = true;
    for c in 0..algebra.idempotents.len() {
        let s = simple_top(algebra, c)?;
        for i in 1..=opts.gldim_bound {
            let d = tor(&s, sigma, i)?.dim;
            flat.push(SimpleTorCheck {
                idempotent: c,
                index: i,
                dim: d,
            });
            if d != 0 {
                all_zero = false;
            }
        }
    }
    if all_zero {
        return Ok(CoherenceCertificate {
            cap: opts.cap,
            gldim_bound: opts.gldim_bound,
            verdict: Verdict::CertifiedFlatPath,
            purity: stages,
            flat_evidence: Some(flat),
            seed: None,
            maps: Vec::new(),
        });
    }

    let t: TowerRef = Arc::new(crate::tower::tower_with_ledger(
        algebra,
        sigma,
        opts.cap,
        opts.gldim_bound,
        stages.clone(),
        false,
    )?);
    let mut rng = crate::seeded_rng(opts.seed);
    let sampled: Vec<(usize, GradedMap)> = (0..opts.map_count)
        .map(|i| {
            random_graded_map(
                &t,
                &mut rng,
                opts.max_generators,
                opts.degree_low,
                opts.degree_high,
            )
            .map(|m| (i, m))
        })
        .collect::<Result<_>>()?;
    let maps: Vec<Result<MapEvidence>> = map_collect(opts.mode, sampled, |(i, f)| {
        map_evidence(&t, &f, i, opts.cap, opts.gldim_bound)
    });
    let maps = maps.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CoherenceCertificate {
        cap: opts.cap,
        gldim_bound: opts.gldim_bound,
        verdict: Verdict::BoundedEvidence,
        purity: stages,
        flat_evidence: Some(flat),
        seed: Some(opts.seed),
        maps,
    })
}

/// The graded module M ⊗_A T truncated at `max_degree`: degree-s part
/// M ⊗ σˢ with the step quotients as μ witnesses.
pub fn module_tensor_tower(
    m: &Module,
    tower: &TowerRef,
    max_degree: usize,
) -> Result<GradedModuleData> {
    if max_degree > tower.cap {
        return Err(Error::Validation(format!(
            "max degree {max_degree} exceeds cap {}",
            tower.cap
        )));
    }
    let mut modules = vec![right_part(m)];
    let mut mu = Vec::new();
    for _ in 0..max_degree {
        let step = tensor_over(modules.last().unwrap(), &tower.sigma)?;
        mu.push(step.qmap.clone());
        modules.push(step.module);
    }
    Ok(GradedModuleData {
        tower: Arc::clone(tower),
        min_degree: 0,
        modules,
        mu,
    })
}

/// A graded module concentrated in one degree with zero μ witnesses.
pub fn concentrated(
    tower: &TowerRef,
    m: &Module,
    degree: i64,
    max_degree: i64,
) -> GradedModuleData {
    let f = tower.algebra.field;
    let ds = tower.sigma.dim;
    let count = (max_degree - degree) as usize + 1;
    let mut modules = Vec::with_capacity(count);
    let mut mu = Vec::new();
    for k in 0..count {
        let dim_k = if k == 0 { m.dim } else { 0 };
        modules.push(if k == 0 {
            right_part(m)
        } else {
            Module::zero(Arc::clone(&tower.algebra), false)
        });
        if k + 1 < count {
            mu.push(Matrix::zero(f, dim_k * ds, 0));
        }
    }
    GradedModuleData {
        tower: Arc::clone(tower),
        min_degree: degree,
        modules,
        mu,
    }
}

/// One term ⊕ e_c T(−s) of a graded resolution, by generator.
#[derive(Debug, Clone)]
pub struct ResolutionTerm {
    pub gens: Vec<(i64, usize)>,
    pub slice_dims: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct GradedResolutionReport {
    pub terms: Vec<ResolutionTerm>,
    pub complete: bool,
    pub length_exceeded: bool,
    pub min_degree: i64,
    pub max_degree: i64,
    pub module_dims: Vec<usize>,
}

impl GradedResolutionReport {
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }
}

struct SliceCache {
    /// (power, idempotent) → e_c·σ^power as (module, basis inside the component)
    map: HashMap<(usize, usize), (Module, Subspace)>,
}

impl SliceCache {
    fn get(&mut self, tower: &TensorTower, pw: usize, c: usize) -> Result<&(Module, Subspace)> {
        if !self.map.contains_key(&(pw, c)) {
            let comp = &tower.components[pw];
            let lm = comp.left_matrices()?;
            let idem = tower.algebra.combine_action(&tower.algebra.idempotents[c], lm);
            let sub = idem.row_space();
            let (module, _) = right_part(comp).submodule(&sub)?;
            self.map.insert((pw, c), (module, sub));
        }
        Ok(&self.map[&(pw, c)])
    }
}

/// Minimal graded resolution of x by induced projectives e_c T(−s), degree by
/// degree through x's window.
pub fn graded_resolution_data(
    x: &GradedModuleData,
    length_bound: usize,
) -> Result<GradedResolutionReport> {
    let tower = Arc::clone(&x.tower);
    let field = tower.algebra.field;
    let ds = tower.sigma.dim;
    let p = x.min_degree;
    let top = x.max_degree();
    if (top - p) as usize > tower.cap {
        return Err(Error::Validation(format!(
            "window spans powers up to {} beyond cap {}",
            top - p,
            tower.cap
        )));
    }
    let window: Vec<i64> = (p..=top).collect();
    let mut cache = SliceCache {
        map: HashMap::new(),
    };
    let mut cur = GradedModuleData {
        tower: Arc::clone(&tower),
        min_degree: p,
        modules: x.modules.iter().map(right_part).collect(),
        mu: x.mu.clone(),
    };
    let mut terms: Vec<ResolutionTerm> = Vec::new();
    let mut complete = false;
    let mut length_exceeded = false;
    loop {
        if cur.is_zero() {
            complete = true;
            break;
        }
        if terms.len() > length_bound {
            length_exceeded = true;
            break;
        }
        // generators: a basis of X_s modulo im μ and the radical, lifted
        // compatibly with the idempotent decomposition
        let mut gens: Vec<(i64, usize, Vector)> = Vec::new();
        for (idx, s) in window.iter().enumerate() {
            let xs = &cur.modules[idx];
            if xs.dim == 0 {
                continue;
            }
            let reached = if idx == 0 {
                Subspace::zero(field, xs.dim)
            } else {
                cur.mu[idx - 1].row_space()
            };
            let (gmod, gproj) = xs.quotient(&reached)?;
            if gmod.dim == 0 {
                continue;
            }
            let (cover, cmap) = projective_cover(&gmod)?;
            let comp = reached.complement_cols();
            for (g, &c) in cover.summands.iter().enumerate() {
                let bar = crate::matrix::row_times_matrix(&cover.gen_coords[g], &cmap.matrix);
                // lift through the quotient and force the idempotent
                let mut lift = vec![field.zero(); xs.dim];
                for (k, &col) in comp.iter().enumerate() {
                    lift[col] = bar[k].clone();
                }
                let gen = xs.act(&lift, &tower.algebra.idempotents[c]);
                debug_assert_eq!(gproj.apply(&gen), bar);
                gens.push((*s, c, gen));
            }
        }

        // cover slices and their kernels; layouts list one (power,
        // idempotent, width) triple per reachable generator so positions
        // align between consecutive degrees
        let mut mu_comp: HashMap<(i64, usize), Matrix> = HashMap::new();
        for &(s, _, _) in &gens {
            for n in 0..=(top - s) as usize {
                if !mu_comp.contains_key(&(s, n)) {
                    mu_comp.insert((s, n), cur.mu_matrix(s, n)?);
                }
            }
        }
        let mut slice_dims = Vec::with_capacity(window.len());
        let mut fmods: Vec<Module> = Vec::new();
        let mut kernels: Vec<Subspace> = Vec::new();
        let mut layouts: Vec<Vec<(usize, usize, usize)>> = Vec::new();
        for (idx, t) in window.iter().enumerate() {
            let xt_dim = cur.modules[idx].dim;
            let mut layout = Vec::new();
            let mut rows: Vec<Vector> = Vec::new();
            let mut owned: Vec<Module> = Vec::new();
            for &(s, c, ref gen) in &gens {
                if s > *t {
                    continue;
                }
                let pw = (*t - s) as usize;
                cache.get(&tower, pw, c)?;
                let comp_dim = tower.dim(pw);
                let muc = &mu_comp[&(s, pw)];
                // contraction of μ with the generator, restricted to e_c σ^pw
                let (smod, sbasis) = &cache.map[&(pw, c)];
                for r in 0..sbasis.dim() {
                    let xrow = sbasis.basis.row(r);
                    let mut val = vec![field.zero(); xt_dim];
                    for (w, cv) in xrow.iter().enumerate().filter(|(_, v)| !field.is_zero(v)) {
                        for (gp, gv) in gen.iter().enumerate().filter(|(_, v)| !field.is_zero(v)) {
                            let mrow = muc.row(gp * comp_dim + w);
                            let coeff = field.mul(cv, gv);
                            for (o, u) in val.iter_mut().zip(mrow) {
                                *o = field.add_mul(o, &coeff, u);
                            }
                        }
                    }
                    rows.push(val);
                }
                layout.push((pw, c, sbasis.dim()));
                owned.push(smod.clone());
            }
            let cover_mat = Matrix::from_rows(field, xt_dim, rows);
            kernels.push(cover_mat.row_kernel());
            slice_dims.push(cover_mat.rows);
            layouts.push(layout);
            if owned.is_empty() {
                fmods.push(Module::zero(Arc::clone(&tower.algebra), false));
            } else {
                let refs: Vec<&Module> = owned.iter().collect();
                fmods.push(Module::direct_sum(&refs));
            }
        }

        // kernel modules and μ witnesses
        let mut kmods = Vec::new();
        for (idx, k) in kernels.iter().enumerate() {
            let (m, _) = fmods[idx].submodule(k)?;
            kmods.push(m);
        }
        let mut kmu = Vec::new();
        for idx in 0..window.len() - 1 {
            // μ_F on flattened pairs; generator g of this layout feeds
            // generator g of the next
            let cur_layout = &layouts[idx];
            let next_layout = &layouts[idx + 1];
            let fdim = fmods[idx].dim;
            let next_dim = fmods[idx + 1].dim;
            let mut next_offsets = Vec::with_capacity(next_layout.len());
            let mut off = 0;
            for &(_, _, w) in next_layout {
                next_offsets.push(off);
                off += w;
            }
            let mut mu_f = Matrix::zero(field, fdim * ds, next_dim);
            let mut row_base = 0;
            for (g, &(pw, c, w)) in cur_layout.iter().enumerate() {
                debug_assert_eq!((next_layout[g].0, next_layout[g].1), (pw + 1, c));
                let src_slice = cache.map[&(pw, c)].1.clone();
                let tgt_slice = cache.get(&tower, pw + 1, c)?.1.clone();
                let toff = next_offsets[g];
                for r in 0..w {
                    let amb = src_slice.basis.row(r);
                    for v in 0..ds {
                        let val = tower.mult_apply_basis(pw, 1, amb, v)?;
                        let coords = tgt_slice
                            .coords_of(&val)
                            .expect("left slices are stable under the step");
                        for (k2, u) in coords.iter().enumerate() {
                            if !field.is_zero(u) {
                                mu_f.set(row_base + r * ds + v, toff + k2, u.clone());
                            }
                        }
                    }
                }
                row_base += w * ds;
            }
            let mut rows = Vec::with_capacity(kernels[idx].dim() * ds);
            for k in 0..kernels[idx].dim() {
                let emb = kernels[idx].basis.row(k);
                for v in 0..ds {
                    let mut val = vec![field.zero(); next_dim];
                    for (ppos, c) in emb.iter().enumerate().filter(|(_, c)| !field.is_zero(c)) {
                        let r = mu_f.row(ppos * ds + v);
                        for (o, u) in val.iter_mut().zip(r) {
                            *o = field.add_mul(o, c, u);
                        }
                    }
                    let coords = kernels[idx + 1]
                        .coords_of(&val)
                        .expect("μ_F carries cover kernels into cover kernels");
                    rows.push(coords);
                }
            }
            kmu.push(Matrix::from_rows(field, kernels[idx + 1].dim(), rows));
        }

        terms.push(ResolutionTerm {
            gens: gens.iter().map(|&(s, c, _)| (s, c)).collect(),
            slice_dims,
        });
        cur = GradedModuleData {
            tower: Arc::clone(&tower),
            min_degree: p,
            modules: kmods,
            mu: kmu,
        };
    }
    Ok(GradedResolutionReport {
        terms,
        complete,
        length_exceeded,
        min_degree: p,
        max_degree: top,
        module_dims: x.dims(),
    })
}

/// Builds M ⊗_A T truncated at `max_degree` and resolves it minimally.
pub fn graded_resolution(
    m: &Module,
    tower: &TowerRef,
    max_degree: usize,
    length_bound: usize,
) -> Result<(GradedModuleData, GradedResolutionReport)> {
    let data = module_tensor_tower(m, tower, max_degree)?;
    let report = graded_resolution_data(&data, length_bound)?;
    Ok((data, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers_quiver, kronecker_quiver, path_algebra, point_quiver};
    use crate::field::FieldSpec;
    use crate::matrix::kron;
    use crate::tower::{make_instance, tower, InstanceKind};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn basis(f: FieldSpec, dim: usize, i: usize) -> Vector {
        let mut v = vec![f.zero(); dim];
        v[i] = f.one();
        v
    }

    fn free_tower(rank: usize, cap: usize) -> TowerRef {
        let a = path_algebra(&point_quiver(), q()).unwrap();
        let sigma = make_instance(InstanceKind::Free(rank), &a).unwrap();
        Arc::new(tower(&a, &sigma, cap, 1, false).unwrap())
    }

    fn dual_regular_tower(cap: usize) -> TowerRef {
        let a = path_algebra(&dual_numbers_quiver(), q()).unwrap();
        let sigma = Module::regular(&a);
        Arc::new(tower(&a, &sigma, cap, 2, false).unwrap())
    }

    fn theta_tower(cap: usize) -> TowerRef {
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let theta =
            crate::derived::ext_bimodule(&Module::dual_regular(&a), &Module::regular(&a), 1)
                .unwrap();
        Arc::new(tower(&a, &theta, cap, 1, false).unwrap())
    }

    fn single_entry_map(t: &TowerRef, src: i64, tgt: i64, entry: Vector) -> GradedMap {
        GradedMap::new(
            GradedFreeModule::new(Arc::clone(t), vec![src]),
            GradedFreeModule::new(Arc::clone(t), vec![tgt]),
            vec![vec![Some(entry)]],
        )
        .unwrap()
    }

    #[test]
    fn multiplication_by_a_variable_on_polynomials_has_no_kernel() {
        let t = free_tower(1, 4);
        let map = single_entry_map(&t, 1, 0, vec![q().one()]);
        let gk = graded_kernel(&map, 4, ExecMode::Sequential).unwrap();
        assert_eq!(gk.kernel_dims, vec![0; 5]);
        assert!(gk.generators.is_empty());
        assert_eq!(gk.cokernel_dims, vec![1, 0, 0, 0, 0]);
        assert_eq!(gk.stabilization, 0);
    }

    #[test]
    fn independent_generator_images_in_the_free_algebra_leave_no_kernel() {
        let t = free_tower(2, 4);
        let map = GradedMap::new(
            GradedFreeModule::new(Arc::clone(&t), vec![1, 1]),
            GradedFreeModule::new(Arc::clone(&t), vec![0]),
            vec![vec![Some(basis(q(), 2, 0)), Some(basis(q(), 2, 1))]],
        )
        .unwrap();
        let gk = graded_kernel(&map, 4, ExecMode::Parallel).unwrap();
        assert_eq!(gk.kernel_dims, vec![0; 5]);
        assert!(gk.generators.is_empty());
        assert_eq!(gk.cokernel_dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn multiplication_by_the_nilpotent_leaves_a_line_in_every_degree() {
        // oracle: the slice in each degree is left multiplication by x on a
        // two dimensional algebra, so its kernel is 2 - rank of that matrix
        let a = path_algebra(&dual_numbers_quiver(), q()).unwrap();
        let x = basis(q(), 2, 1);
        let rows: Vec<Vector> = (0..2).map(|j| a.mult_elems(&x, &basis(q(), 2, j))).collect();
        let left_mult = Matrix::from_rows(q(), 2, rows);
        let expected = 2 - left_mult.rank();
        assert_eq!(expected, 1);

        let t = dual_regular_tower(4);
        let map = single_entry_map(&t, 0, 0, x);
        let gk = graded_kernel(&map, 4, ExecMode::Sequential).unwrap();
        assert_eq!(gk.kernel_dims, vec![expected; 5]);
        assert_eq!(gk.cokernel_dims, vec![1; 5]);
        assert_eq!(gk.generator_degrees(), vec![0]);
        assert_eq!(gk.stabilization, 0);
        gk.kernel.validate().unwrap();
        gk.cokernel.validate().unwrap();
    }

    #[test]
    fn kernel_mu_maps_compose_to_isomorphisms() {
        let t = dual_regular_tower(4);
        let map = single_entry_map(&t, 0, 0, basis(q(), 2, 1));
        let gk = graded_kernel(&map, 4, ExecMode::Sequential).unwrap();
        let unit = mu_map(&gk.kernel, 1, 0).unwrap();
        assert!(unit.is_iso());
        let hop = mu_map(&gk.kernel, 0, 3).unwrap();
        assert_eq!((hop.source_dim, hop.target_dim), (1, 1));
        assert!(hop.is_iso());
        assert!(mu_map(&gk.kernel, 0, 5).is_err());
    }

    #[test]
    fn free_module_slices_stabilize_at_the_top_generator_degree() {
        let t = free_tower(2, 4);
        let p = GradedFreeModule::new(Arc::clone(&t), vec![0, 2]);
        for s in 2..=4i64 {
            for n in 0..=(4 - s) as usize {
                let mu = p.mu(s, n).unwrap();
                assert_eq!(mu.rank(), p.slice_dim(s + n as i64).unwrap(), "({s},{n})");
                let dom =
                    tensor_over(&p.slice_module(s).unwrap(), t.component(n).unwrap()).unwrap();
                assert_eq!(dom.module.dim, p.slice_dim(s + n as i64).unwrap(), "({s},{n})");
            }
        }
        // below the top generator degree the fresh summand is missed
        let below = p.mu(1, 1).unwrap();
        assert!(below.rank() < p.slice_dim(2).unwrap());
    }

    #[test]
    fn graded_map_slices_commute_with_tower_multiplication() {
        let a = path_algebra(&dual_numbers_quiver(), q()).unwrap();
        let sigma = make_instance(InstanceKind::Bar, &a).unwrap();
        let t = Arc::new(tower(&a, &sigma, 3, 2, false).unwrap());
        let mut rng = crate::seeded_rng(11);
        for round in 0..3 {
            let map = random_graded_map(&t, &mut rng, 3, 0, 3).unwrap();
            for m in 0..=3i64 {
                for n in 0..=(3 - m) as usize {
                    let dn = t.dim(n);
                    let lhs = kron(&map.slice(m).unwrap(), &Matrix::identity(q(), dn))
                        .mul(&map.target.mu(m, n).unwrap());
                    let rhs = map
                        .source
                        .mu(m, n)
                        .unwrap()
                        .mul(&map.slice(m + n as i64).unwrap());
                    assert_eq!(lhs, rhs, "round {round}, square at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn cokernel_tor_matches_the_kernel_of_the_induced_tensor_map() {
        // the entries span all of θe₂ and a hyperplane of θe₁, so the degree
        // one cokernel is the injective simple and its Tor₁ cannot vanish
        let t = theta_tower(2);
        let a = &t.algebra;
        let slice = |c: usize| {
            a.combine_action(&a.idempotents[c], &t.sigma.action)
                .row_space()
        };
        let (b1, b2) = (slice(0), slice(1));
        let mut entries: Vec<Option<Vector>> = Vec::new();
        for r in 1..b1.dim() {
            entries.push(Some(b1.basis.row_vec(r)));
        }
        for r in 0..b2.dim() {
            entries.push(Some(b2.basis.row_vec(r)));
        }
        let count = entries.len();
        let map = GradedMap::new(
            GradedFreeModule::new(Arc::clone(&t), vec![1; count]),
            GradedFreeModule::new(Arc::clone(&t), vec![0]),
            vec![entries],
        )
        .unwrap();
        let gk = graded_kernel(&map, 2, ExecMode::Sequential).unwrap();
        let mut nontrivial = false;
        for s in gk.min_degree..2 {
            let idx = (s - gk.min_degree) as usize;
            let qmod = map.target.slice_module(s).unwrap();
            let (imod, _) = qmod.submodule(&gk.image_bases[idx]).unwrap();
            let ti = tensor_over(&imod, &t.sigma).unwrap();
            let tq = tensor_over(&qmod, &t.sigma).unwrap();
            let induced = ti.induce_left(&tq, &gk.image_bases[idx].basis);
            let ker = ti.module.dim - induced.rank();
            let tor1 = tor(&gk.cokernel.modules[idx], &t.sigma, 1).unwrap().dim;
            assert_eq!(ker, tor1, "degree {s}");
            nontrivial |= tor1 > 0;
        }
        assert!(nontrivial, "the forced cokernel must exercise a nonzero Tor");
    }

    #[test]
    fn flat_sigma_certifies_on_the_fast_path() {
        let a = path_algebra(&point_quiver(), q()).unwrap();
        let sigma = make_instance(InstanceKind::Free(2), &a).unwrap();
        let cert = coherence_check(&a, &sigma, &CoherenceOptions::new(3, 1, 5, 1)).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedFlatPath);
        assert_eq!(cert.verdict.label(), "certified-flat-path");
        assert!(cert.maps.is_empty());

        let b = path_algebra(&dual_numbers_quiver(), q()).unwrap();
        let bar = make_instance(InstanceKind::Bar, &b).unwrap();
        let cert = coherence_check(&b, &bar, &CoherenceOptions::new(3, 2, 5, 1)).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedFlatPath);
        let flats = cert.flat_evidence.unwrap();
        assert!(!flats.is_empty());
        assert!(flats.iter().all(|c| c.dim == 0));
    }

    #[test]
    fn impure_sigma_reports_hypothesis_failure() {
        let a = path_algebra(&dual_numbers_quiver(), q()).unwrap();
        let rad = a.radical().unwrap().clone();
        let (k_bi, _) = Module::regular(&a).quotient(&rad).unwrap();
        let cert = coherence_check(&a, &k_bi, &CoherenceOptions::new(3, 3, 5, 1)).unwrap();
        match &cert.verdict {
            Verdict::HypothesisFailure(w) => {
                assert_eq!((w.stage, w.index, w.dim), (2, 1, 1));
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }
        assert_eq!(cert.verdict.label(), "hypothesis-failure");
        assert!(cert.maps.is_empty());
    }

    #[test]
    fn kronecker_theta_collects_bounded_evidence() {
        let a = path_algebra(&kronecker_quiver(), q()).unwrap();
        let theta =
            crate::derived::ext_bimodule(&Module::dual_regular(&a), &Module::regular(&a), 1)
                .unwrap();
        let mut opts = CoherenceOptions::new(3, 1, 2, 7);
        opts.max_generators = 2;
        opts.degree_high = 2;
        let cert = coherence_check(&a, &theta, &opts).unwrap();
        assert_eq!(cert.verdict, Verdict::BoundedEvidence);
        assert_eq!(cert.seed, Some(7));
        assert_eq!(cert.maps.len(), 2);
        for ev in &cert.maps {
            let p = ev
                .source_degrees
                .iter()
                .chain(&ev.target_degrees)
                .min()
                .copied()
                .unwrap();
            assert_eq!(ev.kernel_dims.len() as i64, 3 - p + 1, "map {}", ev.index);
            assert!(ev.stabilization <= 3, "map {}", ev.index);
            assert!(!ev.tor_checks.is_empty() || ev.q >= 3, "map {}", ev.index);
        }
    }

    #[test]
    fn regular_module_resolves_at_length_zero() {
        let t = dual_regular_tower(3);
        let m = Module::regular(&t.algebra);
        let (data, report) = graded_resolution(&m, &t, 3, 2).unwrap();
        data.validate().unwrap();
        assert!(report.complete);
        assert_eq!(report.length(), Some(0));
        assert_eq!(report.terms[0].gens, vec![(0, 0)]);
        assert_eq!(report.terms[0].slice_dims, vec![2, 2, 2, 2]);
    }

    #[test]
    fn kronecker_graded_simples_resolve_at_length_two() {
        let t = theta_tower(3);
        for v in 0..2 {
            let s = crate::module::simple_top(&t.algebra, v).unwrap();
            let x = concentrated(&t, &s, 0, 3);
            let report = graded_resolution_data(&x, 3).unwrap();
            assert!(report.complete, "vertex {v}");
            assert_eq!(report.length(), Some(2), "vertex {v}");
            assert_eq!(report.terms[0].gens, vec![(0, v)]);
            // degreewise Euler characteristic of an exact complex
            for (deg, &xd) in report.module_dims.iter().enumerate() {
                let mut euler: i64 = -(xd as i64);
                for (k, term) in report.terms.iter().enumerate() {
                    let signed = term.slice_dims[deg] as i64;
                    euler += if k % 2 == 0 { signed } else { -signed };
                }
                assert_eq!(euler, 0, "vertex {v}, degree {deg}");
            }
        }
    }

    #[test]
    fn periodic_module_exceeds_any_length_bound() {
        let t = dual_regular_tower(3);
        let k = crate::module::simple_top(&t.algebra, 0).unwrap();
        let (_, report) = graded_resolution(&k, &t, 3, 3).unwrap();
        assert!(!report.complete);
        assert!(report.length_exceeded);
        assert_eq!(report.length(), None);
        assert_eq!(report.terms.len(), 4);
        for term in &report.terms {
            assert_eq!(term.gens, vec![(0, 0)]);
        }
    }

    #[test]
    fn malformed_graded_maps_are_rejected() {
        let t = free_tower(1, 3);
        let p = GradedFreeModule::new(Arc::clone(&t), vec![1]);
        let tgt = GradedFreeModule::new(Arc::clone(&t), vec![0]);
        // entry of the wrong length for its degree difference
        let bad = GradedMap::new(p.clone(), tgt.clone(), vec![vec![Some(vec![q().one(); 2])]]);
        assert!(bad.is_err());
        // a negative degree difference must be the zero entry
        let upward = GradedMap::new(tgt, p, vec![vec![Some(vec![q().one()])]]);
        assert!(upward.is_err());
    }
}
