//! Independent verification machinery: exact clique numbers, sampling-based
//! falsifiers for hyperbolicity / stability / log-concavity, clique-guided
//! witness search for negative stability instances, and the end-to-end
//! reduction verifier.
//!
//! Samplers are semi-decision procedures: a falsification witness is always
//! re-checkable by exact arithmetic, while "not falsified" proves nothing.
//! Ground truth for every constructed instance comes from the clique oracle.
//!
//! Sampling is deterministic: trial i draws from a ChaCha stream keyed by
//! (seed, i), so reports are identical across thread schedules and the
//! reported witness is always the one with the lowest trial index.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::directional::directional_exact_verdict;
use crate::error::{Error, Result};
use crate::gadgets::{
    build_directional_instance, build_quartic_lc_gadget, build_stability_gadget,
    StabilityGadget,
};
use crate::graph::Graph;
use crate::matrix::{inertia, inertia_int, Inertia};
use crate::poly::{LinearMap, Polynomial};
use crate::unipoly::{is_real_rooted, is_real_rooted_int};
use crate::{FPoly, Int, QPoly, QUniPoly, Rational};

/// Denominator exponent for sampled rational grids: points have denominator
/// 2^GRID_BITS and numerators uniform in [−2^GRID_BITS, 2^GRID_BITS].
const GRID_BITS: u32 = 8;
const GRID_DEN: i64 = 1 << GRID_BITS;

/// Desk-scale cap for the exact clique solver.
const CLIQUE_LIMIT: usize = 30;

// ---------------------------------------------------------------------------
// clique oracle

/// Exact maximum clique (size and one witness clique) by branch and bound
/// with greedy-coloring pruning.
pub fn max_clique(g: &Graph) -> Result<(usize, Vec<u32>)> {
    if g.n() > CLIQUE_LIMIT {
        return Err(Error::SizeLimit {
            limit: CLIQUE_LIMIT,
            found: g.n(),
        });
    }
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = g.adjacency_bits()?;
    let mut best: Vec<u32> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    let all: u64 = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    expand(&adj, all, &mut current, &mut best);
    best.sort_unstable();
    Ok((best.len(), best))
}

/// ω(G).
pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_clique(g)?.0)
}

fn expand(adj: &[u64], candidates: u64, current: &mut Vec<u32>, best: &mut Vec<u32>) {
    // color classes bound the clique size extendable from `candidates`
    let order = color_order(adj, candidates);
    let mut cand = candidates;
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let next = cand & adj[v as usize];
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, next, current, best);
        }
        current.pop();
        cand &= !(1u64 << v);
    }
}

/// Greedy coloring of the candidate set; returns (vertex, color) in
/// ascending color order.
fn color_order(adj: &[u64], mut cand: u64) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    let mut color = 0;
    while cand != 0 {
        color += 1;
        let mut class = cand;
        while class != 0 {
            let v = class.trailing_zeros();
            class &= !(1u64 << v);
            class &= !adj[v as usize];
            cand &= !(1u64 << v);
            out.push((v, color));
        }
    }
    out
}

/// All-subsets reference solver for tiny graphs (test oracle).
pub fn naive_clique_number(g: &Graph) -> Result<usize> {
    if g.n() > 20 {
        return Err(Error::SizeLimit {
            limit: 20,
            found: g.n(),
        });
    }
    let adj = g.adjacency_bits()?;
    let mut best = 0usize;
    for mask in 0u64..(1u64 << g.n()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut ok = true;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= !(1u64 << v);
            if mask & !adj[v as usize] & !(1u64 << v) != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = size;
        }
    }
    Ok(best)
}

/// Exact stability verdict for a constructed gadget: real stability of p̃ is
/// equivalent to ω(G) ≤ k through the hyperbolicity/max-ratio chain.
pub fn stability_verdict_exact(gadget: &StabilityGadget) -> Result<bool> {
    Ok(clique_number(&gadget.graph)? <= gadget.k)
}

// ---------------------------------------------------------------------------
// sampling

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Integer numerator on the signed grid [−2^b, 2^b].
fn grid_numer(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-GRID_DEN..=GRID_DEN)
}

/// Integer numerator for the positive grid: (k+1) with k uniform in
/// [0, 2^b], i.e. the sampled value shifted by one grid step 1/2^b.
fn positive_grid_numer(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(0..=GRID_DEN) + 1
}

fn numers_to_rationals(numers: &[i64]) -> Vec<Rational> {
    numers.iter().map(|&k| crate::rat(k, GRID_DEN)).collect()
}

fn clear_denominators_vec(v: &[Rational]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleVerdict {
    Falsified,
    NotFalsified,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SampleWitness {
    /// p restricted to base + t·direction has a nonreal root.
    NonRealRooted {
        base: Vec<Rational>,
        direction: Vec<Rational>,
        restriction: QUniPoly,
    },
    /// The Hessian at a positive point has at least two positive eigenvalues.
    BadHessian {
        point: Vec<Rational>,
        inertia: Inertia,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub verdict: SampleVerdict,
    pub witness: Option<SampleWitness>,
    pub samples_tried: u64,
    pub seed: u64,
}

impl SampleReport {
    fn not_falsified(trials: u64, seed: u64) -> Self {
        SampleReport {
            verdict: SampleVerdict::NotFalsified,
            witness: None,
            samples_tried: trials,
            seed,
        }
    }

    pub fn is_falsified(&self) -> bool {
        self.verdict == SampleVerdict::Falsified
    }

    pub fn to_json(&self, kind: &str, exact_ground_truth: Option<bool>) -> Value {
        json!({
            "kind": kind,
            "verdict": match self.verdict {
                SampleVerdict::Falsified => "falsified",
                SampleVerdict::NotFalsified => "not-falsified",
            },
            "witness": self.witness.as_ref().map(witness_json),
            "samples_tried": self.samples_tried,
            "seed": self.seed,
            "exact_ground_truth": exact_ground_truth,
        })
    }
}

fn rationals_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|r| Value::String(r.to_string())).collect())
}

fn witness_json(w: &SampleWitness) -> Value {
    match w {
        SampleWitness::NonRealRooted {
            base,
            direction,
            restriction,
        } => json!({
            "type": "non-real-rooted-restriction",
            "base": rationals_json(base),
            "direction": rationals_json(direction),
            "restriction_coeffs": rationals_json(restriction.coeffs()),
        }),
        SampleWitness::BadHessian { point, inertia } => json!({
            "type": "bad-hessian-inertia",
            "point": rationals_json(point),
            "inertia": { "n_pos": inertia.n_pos, "n_zero": inertia.n_zero, "n_neg": inertia.n_neg },
        }),
    }
}

/// Re-check a witness against the polynomial it claims to falsify, with
/// fresh exact arithmetic.
pub fn verify_witness(p: &QPoly, w: &SampleWitness) -> Result<bool> {
    match w {
        SampleWitness::NonRealRooted {
            base,
            direction,
            restriction,
        } => {
            let r = p.univariate_restriction(base, direction)?;
            if &r != restriction {
                return Ok(false);
            }
            if r.is_zero() {
                // the whole line lies in the zero set: certainly not stable
                return Ok(true);
            }
            Ok(!is_real_rooted(&r)?)
        }
        SampleWitness::BadHessian { point, inertia: claimed } => {
            let h = p.hessian_at(point)?;
            let got = inertia(&h);
            Ok(&got == claimed && got.n_pos >= 2)
        }
    }
}

/// Sample univariate restrictions of p along the fixed direction e from
/// random grid base points; falsified as soon as one is not real rooted.
/// Requires p homogeneous with p(e) > 0.
pub fn hyperbolicity_sampler(
    p: &QPoly,
    e: &[Rational],
    trials: u64,
    seed: u64,
) -> Result<SampleReport> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if !p.evaluate(e)?.is_positive() {
        return Err(Error::NonPositiveAtPoint);
    }
    let n = p.num_vars();
    let (p_int, _) = p.clear_denominators();
    let e_int = clear_denominators_vec(e);

    let hit = (0..trials).into_par_iter().find_first(|&i| {
        let mut rng = trial_rng(seed, i);
        let base: Vec<Int> = (0..n).map(|_| Int::from(grid_numer(&mut rng))).collect();
        let r = p_int
            .univariate_restriction_int(&base, &e_int)
            .expect("dimensions match");
        r.is_zero() || !is_real_rooted_int(&r).expect("restriction nonzero")
    });

    match hit {
        None => Ok(SampleReport::not_falsified(trials, seed)),
        Some(i) => {
            let mut rng = trial_rng(seed, i);
            let base: Vec<Rational> = (0..n)
                .map(|_| crate::rat(grid_numer(&mut rng), GRID_DEN))
                .collect();
            let restriction = p.univariate_restriction(&base, e)?;
            let witness = SampleWitness::NonRealRooted {
                base,
                direction: e.to_vec(),
                restriction,
            };
            debug_assert!(verify_witness(p, &witness)?);
            Ok(SampleReport {
                verdict: SampleVerdict::Falsified,
                witness: Some(witness),
                samples_tried: i + 1,
                seed,
            })
        }
    }
}

/// Draw the base point and the strictly positive direction for stability
/// trial i. Shared by the generic and the composed samplers so their
/// reports coincide trial for trial.
fn stability_trial_numers(seed: u64, trial: u64, n: usize) -> (Vec<i64>, Vec<i64>) {
    let mut rng = trial_rng(seed, trial);
    let base: Vec<i64> = (0..n).map(|_| grid_numer(&mut rng)).collect();
    let dir: Vec<i64> = (0..n).map(|_| positive_grid_numer(&mut rng)).collect();
    (base, dir)
}

/// Sample restrictions p(x + t·v) with v strictly positive; for homogeneous
/// polynomials real stability is exactly hyperbolicity along the open
/// positive orthant, so a nonreal root falsifies stability.
pub fn stability_sampler(p: &QPoly, trials: u64, seed: u64) -> Result<SampleReport> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let (p_int, _) = p.clear_denominators();
    stability_sampler_on(&p_int, p, None, trials, seed)
}

/// The same sampler evaluated through the factored form p̃ = p ∘ M, which is
/// much cheaper when p is sparse and p̃ dense. Reports are identical to
/// `stability_sampler(&p_tilde, …)` with the same seed.
pub fn stability_sampler_composed(
    gadget: &StabilityGadget,
    trials: u64,
    seed: u64,
) -> Result<SampleReport> {
    let (p_int, _) = gadget.p.clear_denominators();
    stability_sampler_on(&p_int, &gadget.p_tilde, Some(&gadget.map), trials, seed)
}

fn stability_sampler_on(
    inner_int: &Polynomial<Int>,
    reported: &QPoly,
    map: Option<&LinearMap<Rational>>,
    trials: u64,
    seed: u64,
) -> Result<SampleReport> {
    let n = reported.num_vars();
    // integer matrix for the composed path (positive scaling is harmless)
    let map_int: Option<LinearMap<Int>> = map.map(|m| {
        let mut lcm = Int::one();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                lcm = lcm.lcm(m.get(i, j).denom());
            }
        }
        let mut out = LinearMap::zero(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = m.get(i, j);
                out.set(i, j, v.numer() * (&lcm / v.denom()));
            }
        }
        out
    });

    let hit = (0..trials).into_par_iter().find_first(|&i| {
        let (base, dir) = stability_trial_numers(seed, i, n);
        let base: Vec<Int> = base.into_iter().map(Int::from).collect();
        let dir: Vec<Int> = dir.into_iter().map(Int::from).collect();
        let r = match &map_int {
            None => inner_int
                .univariate_restriction_int(&base, &dir)
                .expect("dimensions match"),
            Some(m) => {
                let b = m.matvec(&base).expect("dimensions match");
                let d = m.matvec(&dir).expect("dimensions match");
                inner_int
                    .univariate_restriction_int(&b, &d)
                    .expect("dimensions match")
            }
        };
        r.is_zero() || !is_real_rooted_int(&r).expect("restriction nonzero")
    });

    match hit {
        None => Ok(SampleReport::not_falsified(trials, seed)),
        Some(i) => {
            let (base, dir) = stability_trial_numers(seed, i, n);
            let base = numers_to_rationals(&base);
            let direction = numers_to_rationals(&dir);
            let restriction = reported.univariate_restriction(&base, &direction)?;
            let witness = SampleWitness::NonRealRooted {
                base,
                direction,
                restriction,
            };
            debug_assert!(verify_witness(reported, &witness)?);
            Ok(SampleReport {
                verdict: SampleVerdict::Falsified,
                witness: Some(witness),
                samples_tried: i + 1,
                seed,
            })
        }
    }
}

/// Sample positive grid points and test the one-positive-eigenvalue
/// condition of the Hessian there; two or more positive eigenvalues at any
/// point falsify log-concavity. Requires nonzero f with nonnegative
/// coefficients.
pub fn log_concavity_sampler(f: &QPoly, trials: u64, seed: u64) -> Result<SampleReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.has_nonneg_coeffs() {
        return Err(Error::NegativeCoefficient);
    }
    let n = f.num_vars();
    let (f_int, _) = f.clear_denominators();

    let hit = (0..trials).into_par_iter().find_first(|&i| {
        let mut rng = trial_rng(seed, i);
        // the Hessian is homogeneous in the point, so the integer numerators
        // have the same inertia as the rational grid point
        let w: Vec<Int> = (0..n)
            .map(|_| Int::from(positive_grid_numer(&mut rng)))
            .collect();
        let h = f_int.hessian_at(&w).expect("dimensions match");
        inertia_int(&h).n_pos >= 2
    });

    match hit {
        None => Ok(SampleReport::not_falsified(trials, seed)),
        Some(i) => {
            let mut rng = trial_rng(seed, i);
            let point: Vec<Rational> = (0..n)
                .map(|_| crate::rat(positive_grid_numer(&mut rng), GRID_DEN))
                .collect();
            let h = f.hessian_at(&point)?;
            let ine = inertia(&h);
            let witness = SampleWitness::BadHessian {
                point,
                inertia: ine,
            };
            debug_assert!(verify_witness(f, &witness)?);
            Ok(SampleReport {
                verdict: SampleVerdict::Falsified,
                witness: Some(witness),
                samples_tried: i + 1,
                seed,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// clique-guided witness search for negative stability instances

/// For ω(G) > k, points supported on a maximum clique violate hyperbolicity
/// of p along the apex: with x = u on the clique, y = w on its edges, the
/// restriction p(base + t·e0) fails to be real rooted exactly when
/// (q_G/ℓ)² > ‖·‖⁶. Near-optimal (u, w) come from snapping the analytic
/// maximizer to the grid and widening a small window, all verified exactly.
fn clique_guided_witness(gadget: &StabilityGadget, clique: &[u32]) -> Option<Vec<Rational>> {
    let omega = clique.len();
    if omega < 2 {
        return None;
    }
    let graph = &gadget.graph;
    let pairs = (omega * (omega - 1) / 2) as i64;
    let u_opt = (2.0 / (3.0 * omega as f64)).sqrt();
    let w_opt = (2.0 / (3.0 * omega as f64 * (omega as f64 - 1.0))).sqrt();
    let pairs_q = Rational::from_integer(Int::from(pairs));
    let omega_q = Rational::from_integer(Int::from(omega as i64));

    for den in [256i64, 1024, 4096] {
        let u0 = (u_opt * den as f64).round() as i64;
        let w0 = (w_opt * den as f64).round() as i64;
        for du in -4i64..=4 {
            for dw in -4i64..=4 {
                let (un, wn) = (u0 + du, w0 + dw);
                if un <= 0 || wn <= 0 {
                    continue;
                }
                let u = crate::rat(un, den);
                let w = crate::rat(wn, den);
                let q = &pairs_q * &u * &u * &w;
                let s2 = &omega_q * &u * &u + &pairs_q * &w * &w;
                // violation: (q/ℓ)² > s2³
                let lhs = (&q / &gadget.ell).pow(2);
                let rhs = &s2 * &s2 * &s2;
                if lhs > rhs {
                    let m = gadget.m();
                    let n = graph.n();
                    let mut x = vec![Rational::zero(); m];
                    for &v in clique {
                        x[v as usize] = u.clone();
                    }
                    for (e, (a, b)) in graph.edges().enumerate() {
                        if clique.contains(&a) && clique.contains(&b) {
                            x[n + e] = w.clone();
                        }
                    }
                    return Some(x);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// reduction verification

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Stability,
    QuarticLc,
    Directional,
}

impl ReductionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionKind::Stability => "stability",
            ReductionKind::QuarticLc => "quartic-lc",
            ReductionKind::Directional => "directional",
        }
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stability" => Ok(ReductionKind::Stability),
            "quartic-lc" => Ok(ReductionKind::QuarticLc),
            "directional" => Ok(ReductionKind::Directional),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown reduction kind '{other}'"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// The sampled/witness side agrees with the exact clique verdict.
    Agree,
    /// Disagreement with exact ground truth: always a bug.
    Conflict,
    /// Negative instance whose witness search exhausted its budget; sampler
    /// incompleteness, not a bug.
    InconclusiveNegative,
}

impl ReductionOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionOutcome::Agree => "AGREE",
            ReductionOutcome::Conflict => "CONFLICT",
            ReductionOutcome::InconclusiveNegative => "INCONCLUSIVE-NEGATIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReductionWitness {
    /// An exactly verified stability falsifier for p̃ (negative instances);
    /// `from_sampler` records whether plain sampling or the clique-guided
    /// scan found it.
    StabilityRestriction {
        witness: SampleWitness,
        from_sampler: bool,
    },
    /// Exact Hessian inertia of the quartic gadget at the clique-indicator
    /// point.
    QuarticHessian {
        point: Vec<Rational>,
        inertia: Inertia,
    },
    /// The exact a(ω) vs ℓ comparison deciding the directional instance.
    DirectionalComparison { ell: Rational, omega: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionReport {
    pub kind: ReductionKind,
    pub n: usize,
    pub k: usize,
    pub omega: usize,
    /// Ground truth ω(G) ≤ k from the clique oracle.
    pub exact_positive: bool,
    pub outcome: ReductionOutcome,
    pub sampler: Option<SampleReport>,
    pub witness: Option<ReductionWitness>,
    pub seed: u64,
}

impl ReductionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "verdict": self.outcome.name(),
            "n": self.n,
            "k": self.k,
            "omega": self.omega,
            "exact_ground_truth": self.exact_positive,
            "samples_tried": self.sampler.as_ref().map(|s| s.samples_tried),
            "seed": self.seed,
            "witness": self.witness.as_ref().map(|w| match w {
                ReductionWitness::StabilityRestriction { witness, from_sampler } => {
                    let mut v = witness_json(witness);
                    v["from_sampler"] = json!(from_sampler);
                    v
                }
                ReductionWitness::QuarticHessian { point, inertia } => json!({
                    "type": "quartic-hessian",
                    "point": rationals_json(point),
                    "inertia": { "n_pos": inertia.n_pos, "n_zero": inertia.n_zero, "n_neg": inertia.n_neg },
                }),
                ReductionWitness::DirectionalComparison { ell, omega } => json!({
                    "type": "directional-comparison",
                    "ell": ell.to_string(),
                    "omega": omega,
                }),
            }),
        })
    }
}

/// Desk-scale cap for exhaustive reduction verification.
const VERIFY_LIMIT: usize = 12;

/// Build the reduction for (kind, G, k), compute the exact verdict via the
/// clique oracle, then confirm it on the polynomial side: samplers for
/// positive instances, exactly verified witnesses for negative ones.
/// CONFLICT outcomes indicate a bug; INCONCLUSIVE-NEGATIVE only means the
/// witness search budget ran out.
pub fn verify_reduction(
    kind: ReductionKind,
    graph: &Graph,
    k: i64,
    budget: u64,
    seed: u64,
) -> Result<ReductionReport> {
    if graph.n() > VERIFY_LIMIT {
        return Err(Error::SizeLimit {
            limit: VERIFY_LIMIT,
            found: graph.n(),
        });
    }
    let (omega, clique) = max_clique(graph)?;
    match kind {
        ReductionKind::Stability => {
            let gadget = build_stability_gadget(graph, k, None)?;
            let exact_positive = omega <= gadget.k;
            if exact_positive {
                let report = stability_sampler_composed(&gadget, budget, seed)?;
                let outcome = if report.is_falsified() {
                    ReductionOutcome::Conflict
                } else {
                    ReductionOutcome::Agree
                };
                let witness = report.witness.clone().map(|w| {
                    ReductionWitness::StabilityRestriction {
                        witness: w,
                        from_sampler: true,
                    }
                });
                Ok(ReductionReport {
                    kind,
                    n: graph.n(),
                    k: gadget.k,
                    omega,
                    exact_positive,
                    outcome,
                    sampler: Some(report),
                    witness,
                    seed,
                })
            } else {
                negative_stability_report(kind, &gadget, omega, &clique, budget, seed)
            }
        }
        ReductionKind::QuarticLc => {
            let gadget = build_quartic_lc_gadget(graph, k)?;
            let exact_positive = omega <= gadget.k;
            if exact_positive {
                let report = log_concavity_sampler(&gadget.g, budget, seed)?;
                let outcome = if report.is_falsified() {
                    ReductionOutcome::Conflict
                } else {
                    ReductionOutcome::Agree
                };
                let witness = report.witness.clone().map(|w| match w {
                    SampleWitness::BadHessian { point, inertia } => {
                        ReductionWitness::QuarticHessian { point, inertia }
                    }
                    other => unreachable!("log-concavity sampler yields Hessian witnesses: {other:?}"),
                });
                Ok(ReductionReport {
                    kind,
                    n: graph.n(),
                    k: gadget.k,
                    omega,
                    exact_positive,
                    outcome,
                    sampler: Some(report),
                    witness,
                    seed,
                })
            } else {
                // deterministic exact witness: Hessian of g at the integer
                // clique indicator with z = 1 has ≥ 2 positive eigenvalues
                let point = gadget.witness_point(&clique);
                let h = gadget.g.hessian_at(&point)?;
                let ine = inertia(&h);
                let outcome = if ine.n_pos >= 2 {
                    ReductionOutcome::Agree
                } else {
                    ReductionOutcome::Conflict
                };
                Ok(ReductionReport {
                    kind,
                    n: graph.n(),
                    k: gadget.k,
                    omega,
                    exact_positive,
                    outcome,
                    sampler: None,
                    witness: Some(ReductionWitness::QuarticHessian {
                        point,
                        inertia: ine,
                    }),
                    seed,
                })
            }
        }
        ReductionKind::Directional => {
            let inst = build_directional_instance(graph, k)?;
            let exact_positive = omega <= inst.k;
            let comparison = directional_exact_verdict(&inst.ell, omega);
            let outcome = if comparison == exact_positive {
                ReductionOutcome::Agree
            } else {
                ReductionOutcome::Conflict
            };
            Ok(ReductionReport {
                kind,
                n: graph.n(),
                k: inst.k,
                omega,
                exact_positive,
                outcome,
                sampler: None,
                witness: Some(ReductionWitness::DirectionalComparison {
                    ell: inst.ell,
                    omega,
                }),
                seed,
            })
        }
    }
}

/// Negative stability instance: a short sampling phase first (cheap
/// witnesses when violations are dense), then the clique-guided exact scan,
/// then the remaining sampler budget. The final witness is always an
/// exactly verified stability falsifier for p̃ along the strictly positive
/// direction 1/(2m).
fn negative_stability_report(
    kind: ReductionKind,
    gadget: &StabilityGadget,
    omega: usize,
    clique: &[u32],
    budget: u64,
    seed: u64,
) -> Result<ReductionReport> {
    let phase1 = budget.min(2_000);
    let report = stability_sampler_composed(gadget, phase1, seed)?;
    if report.is_falsified() {
        let witness = report.witness.clone().expect("falsified has witness");
        return Ok(ReductionReport {
            kind,
            n: gadget.graph.n(),
            k: gadget.k,
            omega,
            exact_positive: false,
            outcome: ReductionOutcome::Agree,
            sampler: Some(report),
            witness: Some(ReductionWitness::StabilityRestriction {
                witness,
                from_sampler: true,
            }),
            seed,
        });
    }

    if let Some(x) = clique_guided_witness(gadget, clique) {
        let m = gadget.m();
        // hyperbolicity witness for p at base (0, x) along e0, lifted to a
        // stability witness for p̃ along the positive direction 1/(2m)
        let mut z = vec![Rational::zero(); m + 1];
        z[1..].clone_from_slice(&x);
        let base = gadget.lift_point(&z)?;
        let direction = vec![crate::rat(1, 2 * m as i64); 2 * m];
        let restriction = gadget.p_tilde.univariate_restriction(&base, &direction)?;
        let witness = SampleWitness::NonRealRooted {
            base,
            direction,
            restriction,
        };
        if verify_witness(&gadget.p_tilde, &witness)? {
            return Ok(ReductionReport {
                kind,
                n: gadget.graph.n(),
                k: gadget.k,
                omega,
                exact_positive: false,
                outcome: ReductionOutcome::Agree,
                sampler: Some(report),
                witness: Some(ReductionWitness::StabilityRestriction {
                    witness,
                    from_sampler: false,
                }),
                seed,
            });
        }
    }

    // spend whatever budget is left on plain sampling
    if budget > phase1 {
        let rest = stability_sampler_composed(gadget, budget, seed)?;
        if rest.is_falsified() {
            let witness = rest.witness.clone().expect("falsified has witness");
            return Ok(ReductionReport {
                kind,
                n: gadget.graph.n(),
                k: gadget.k,
                omega,
                exact_positive: false,
                outcome: ReductionOutcome::Agree,
                sampler: Some(rest),
                witness: Some(ReductionWitness::StabilityRestriction {
                    witness,
                    from_sampler: true,
                }),
                seed,
            });
        }
        return Ok(ReductionReport {
            kind,
            n: gadget.graph.n(),
            k: gadget.k,
            omega,
            exact_positive: false,
            outcome: ReductionOutcome::InconclusiveNegative,
            sampler: Some(rest),
            witness: None,
            seed,
        });
    }
    Ok(ReductionReport {
        kind,
        n: gadget.graph.n(),
        k: gadget.k,
        omega,
        exact_positive: false,
        outcome: ReductionOutcome::InconclusiveNegative,
        sampler: Some(report),
        witness: None,
        seed,
    })
}

// ---------------------------------------------------------------------------
// floating spot check for the sphere maximum of q_G

/// Projected gradient ascent for q_G on the unit sphere: the best value over
/// `starts` random starts of `iters` steps each. Floating point by design;
/// used only to spot-check the clique formula for the maximum.
pub fn sphere_ascent(q: &FPoly, starts: u64, iters: u32, seed: u64) -> f64 {
    let n = q.num_vars();
    if n == 0 {
        return 0.0;
    }
    let partials: Vec<FPoly> = (0..n)
        .map(|i| q.partial(i as u32).expect("variable in range"))
        .collect();
    let mut best = f64::NEG_INFINITY;
    for s in 0..starts {
        let mut rng = trial_rng(seed, s);
        let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        normalize(&mut x);
        let mut step = 0.2;
        let mut value = q.evaluate(&x).expect("dimensions match");
        for _ in 0..iters {
            let grad: Vec<f64> = partials
                .iter()
                .map(|p| p.evaluate(&x).expect("dimensions match"))
                .collect();
            let mut cand: Vec<f64> = x.iter().zip(&grad).map(|(a, g)| a + step * g).collect();
            normalize(&mut cand);
            let cand_value = q.evaluate(&cand).expect("dimensions match");
            if cand_value > value {
                x = cand;
                value = cand_value;
            } else {
                step *= 0.5;
                if step < 1e-12 {
                    break;
                }
            }
        }
        if value > best {
            best = value;
        }
    }
    best
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    } else {
        x[0] = 1.0;
    }
}

/// Float value of a(k): the sphere maximum of q_G when ω(G) = k.
pub fn a_of_k_f64(k: usize) -> f64 {
    (2.0f64 / 27.0).sqrt() * (1.0 - 1.0 / k as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::build_q_g;
    use crate::poly::Monomial;
    use crate::scalar::rat_int;

    fn qpoly(n: usize, terms: &[(&[(u32, u32)], i64)]) -> QPoly {
        Polynomial::from_terms(
            n,
            terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.iter().copied()), rat_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(clique_number(&Graph::path(3)).unwrap(), 2);
        assert_eq!(clique_number(&Graph::petersen()).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(5)).unwrap(), 1);
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap(), 2);
        assert!(clique_number(&Graph::empty(31)).is_err());
    }

    #[test]
    fn clique_matches_naive_on_small_graphs() {
        for g in crate::graph::graphs_up_to_isomorphism(4) {
            assert_eq!(
                clique_number(&g).unwrap(),
                naive_clique_number(&g).unwrap(),
                "{g}"
            );
        }
    }

    #[test]
    fn clique_witness_is_a_clique() {
        let (size, members) = max_clique(&Graph::petersen()).unwrap();
        assert_eq!(size, members.len());
        for (i, &a) in members.iter().enumerate() {
            for &b in members.iter().skip(i + 1) {
                assert!(Graph::petersen().has_edge(a, b));
            }
        }
    }

    #[test]
    fn hyperbolicity_of_lorentz_quadratic() {
        // x0² − x1² − x2² is hyperbolic along e0
        let p = qpoly(3, &[(&[(0, 2)], 1), (&[(1, 2)], -1), (&[(2, 2)], -1)]);
        let e = vec![rat_int(1), rat_int(0), rat_int(0)];
        let r = hyperbolicity_sampler(&p, &e, 500, 7).unwrap();
        assert_eq!(r.verdict, SampleVerdict::NotFalsified);
        assert_eq!(r.samples_tried, 500);

        // x0² + x1² is not
        let p = qpoly(2, &[(&[(0, 2)], 1), (&[(1, 2)], 1)]);
        let e = vec![rat_int(1), rat_int(0)];
        let r = hyperbolicity_sampler(&p, &e, 500, 7).unwrap();
        assert!(r.is_falsified());
        assert!(verify_witness(&p, r.witness.as_ref().unwrap()).unwrap());

        // p(e) must be positive
        let lorentz = qpoly(3, &[(&[(0, 2)], 1), (&[(1, 2)], -1), (&[(2, 2)], -1)]);
        assert!(matches!(
            hyperbolicity_sampler(&lorentz, &[rat_int(0), rat_int(1), rat_int(0)], 10, 0)
                .map(|_| ())
                .unwrap_err(),
            Error::NonPositiveAtPoint
        ));
    }

    #[test]
    fn stability_sampler_basics() {
        // bilinear x1x2 is stable
        let p = qpoly(2, &[(&[(0, 1), (1, 1)], 1)]);
        let r = stability_sampler(&p, 300, 11).unwrap();
        assert_eq!(r.verdict, SampleVerdict::NotFalsified);

        // x1² + x2² is not
        let p = qpoly(2, &[(&[(0, 2)], 1), (&[(1, 2)], 1)]);
        let r = stability_sampler(&p, 300, 11).unwrap();
        assert!(r.is_falsified());
        assert!(verify_witness(&p, r.witness.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn composed_sampler_matches_generic() {
        let gadget = build_stability_gadget(&Graph::path(3), 2, None).unwrap();
        let a = stability_sampler(&gadget.p_tilde, 40, 3).unwrap();
        let b = stability_sampler_composed(&gadget, 40, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn log_concavity_sampler_basics() {
        // (x1+x2)^4: log concave
        let lin = qpoly(2, &[(&[(0, 1)], 1), (&[(1, 1)], 1)]);
        let f = lin.pow(4);
        let r = log_concavity_sampler(&f, 100, 5).unwrap();
        assert_eq!(r.verdict, SampleVerdict::NotFalsified);

        // x1^4 + x2^4: Hessian diag(12x², 12y²) has two positive eigenvalues
        let f = qpoly(2, &[(&[(0, 4)], 1), (&[(1, 4)], 1)]);
        let r = log_concavity_sampler(&f, 100, 5).unwrap();
        assert!(r.is_falsified());
        assert_eq!(r.samples_tried, 1);
        assert!(verify_witness(&f, r.witness.as_ref().unwrap()).unwrap());

        assert!(log_concavity_sampler(&QPoly::zero(2), 10, 0).is_err());
    }

    #[test]
    fn determinism_same_seed_same_report() {
        let p = qpoly(2, &[(&[(0, 2)], 1), (&[(1, 2)], 1)]);
        let a = stability_sampler(&p, 200, 42).unwrap();
        let b = stability_sampler(&p, 200, 42).unwrap();
        assert_eq!(a, b);
        let c = stability_sampler(&p, 200, 43).unwrap();
        // a different seed may find a different witness index
        assert_eq!(c.verdict, SampleVerdict::Falsified);
    }

    #[test]
    fn verify_reduction_examples() {
        // (stability, P3, 2): positive, AGREE
        let r = verify_reduction(ReductionKind::Stability, &Graph::path(3), 2, 500, 1).unwrap();
        assert_eq!(r.outcome, ReductionOutcome::Agree);
        assert!(r.exact_positive);

        // (stability, K3, 2): negative with an exactly verified witness
        let r =
            verify_reduction(ReductionKind::Stability, &Graph::complete(3), 2, 2_000, 1).unwrap();
        assert_eq!(r.outcome, ReductionOutcome::Agree);
        assert!(!r.exact_positive);
        assert!(matches!(
            r.witness,
            Some(ReductionWitness::StabilityRestriction { .. })
        ));

        // (quartic-lc, K3, 1): negative with exact witness
        let r =
            verify_reduction(ReductionKind::QuarticLc, &Graph::complete(3), 1, 200, 1).unwrap();
        assert_eq!(r.outcome, ReductionOutcome::Agree);
        assert!(!r.exact_positive);
        match r.witness {
            Some(ReductionWitness::QuarticHessian { inertia, .. }) => {
                assert!(inertia.n_pos >= 2)
            }
            other => panic!("expected Hessian witness, got {other:?}"),
        }

        // (quartic-lc, K3, 3): positive
        let r =
            verify_reduction(ReductionKind::QuarticLc, &Graph::complete(3), 3, 200, 1).unwrap();
        assert_eq!(r.outcome, ReductionOutcome::Agree);
        assert!(r.exact_positive);

        // (directional, K3, 3): positive, exact
        let r =
            verify_reduction(ReductionKind::Directional, &Graph::complete(3), 3, 0, 1).unwrap();
        assert_eq!(r.outcome, ReductionOutcome::Agree);
        assert!(r.exact_positive);

        // (directional, K3, 1): negative, exact (a(1) = 0 edge case)
        let r =
            verify_reduction(ReductionKind::Directional, &Graph::complete(3), 1, 0, 1).unwrap();
        assert_eq!(r.outcome, ReductionOutcome::Agree);
        assert!(!r.exact_positive);
    }

    #[test]
    fn ascent_reaches_known_maximum_on_k3() {
        let q = build_q_g(&Graph::complete(3)).to_f64();
        let best = sphere_ascent(&q, 30, 2000, 9);
        let a3 = a_of_k_f64(3);
        assert!((best - a3).abs() < 1e-4, "best {best} vs a(3) {a3}");
    }

    #[test]
    fn report_json_shape() {
        let r = verify_reduction(ReductionKind::Directional, &Graph::path(3), 2, 0, 1).unwrap();
        let v = r.to_json();
        assert_eq!(v["kind"], "directional");
        assert_eq!(v["verdict"], "AGREE");
        assert_eq!(v["exact_ground_truth"], true);
    }
}
