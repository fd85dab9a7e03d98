//! Burner parameterized by minimum degree: a greedy maximal 2r-separated
//! activator set followed by per-round padding, with a radius shortcut
//! when one central fire already spreads fast enough. The realized
//! schedule always completes within ⌈√(24n/(δ+1))⌉ rounds.

use crate::ceil_sqrt;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::process::{pad_to_completion, simulate, BurningSchedule};

#[derive(Debug, Clone)]
pub struct DenseBurnPlan {
    /// Separation radius used by the greedy phase; 0 when the radius
    /// shortcut skipped the greedy phase entirely.
    pub r: usize,
    /// Activators in greedy pick order (or just the center vertex when
    /// the shortcut applies).
    pub activator_set: Vec<usize>,
    pub schedule: BurningSchedule,
    /// ⌈√(24n/(δ+1))⌉, the certified completion bound.
    pub bound: usize,
    pub used_radius_shortcut: bool,
    /// Simulated completion of `schedule`.
    pub completion: usize,
}

/// Greedy maximal set with pairwise distance > 2r: scan vertices in
/// ascending id order, keep a vertex if no chosen vertex is within 2r,
/// removing its ball N_2r from consideration.
pub fn greedy_separated_set(g: &Graph, r: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return Err(Error::InvalidInput("separation radius must be >= 1".into()));
    }
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    let mut set = Vec::new();
    for v in 0..n {
        if removed[v] {
            continue;
        }
        set.push(v);
        for w in g.ball(v, 2 * r)? {
            removed[w] = true;
        }
    }
    Ok(set)
}

/// ⌊(r+2)/3⌋·(δ+1): every ball N_r(v) in a graph of minimum degree δ
/// holds at least this many vertices.
pub fn ball_lower_bound(r: usize, delta: usize) -> usize {
    r.div_ceil(3) * (delta + 1)
}

fn realize(
    g: &Graph,
    r: usize,
    activator_set: Vec<usize>,
    shortcut: bool,
    bound: usize,
) -> Result<DenseBurnPlan> {
    let schedule = pad_to_completion(g, activator_set.clone())?;
    let report = simulate(g, &schedule)?;
    let completion = report
        .rounds_used(schedule.len())
        .expect("padded schedule burns a connected graph");
    Ok(DenseBurnPlan {
        r,
        activator_set,
        schedule,
        bound,
        used_radius_shortcut: shortcut,
        completion,
    })
}

/// Burns `g` using the minimum-degree strategy. Chooses the radius
/// shortcut when rad(G) < √(3n/(2(δ+1))); otherwise picks r among the
/// integer neighbors of r* = √(3n/(2(δ+1))) clamped to [1, rad(G)] and
/// keeps the shorter realized schedule (ties favor smaller r).
pub fn burn_dense(g: &Graph) -> Result<DenseBurnPlan> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    let metrics = g.metrics()?; // rejects disconnected inputs
    let delta = metrics.min_degree;
    let bound = ceil_sqrt((24 * n as u64).div_ceil(delta as u64 + 1)) as usize;
    if n == 1 {
        return realize(g, 0, vec![0], true, bound.max(1));
    }
    let r_star = (3.0 * n as f64 / (2.0 * (delta as f64 + 1.0))).sqrt();

    if (metrics.radius as f64) < r_star {
        return realize(g, 0, vec![metrics.center_vertex], true, bound);
    }

    let mut candidates: Vec<usize> = [r_star.floor() as usize, r_star.ceil() as usize]
        .into_iter()
        .map(|r| r.clamp(1, metrics.radius))
        .collect();
    candidates.dedup();

    let mut best: Option<DenseBurnPlan> = None;
    for r in candidates {
        let set = greedy_separated_set(g, r)?;
        let plan = realize(g, r, set, false, bound)?;
        let better = match &best {
            None => true,
            Some(b) => plan.completion < b.completion,
        };
        if better {
            best = Some(plan);
        }
    }
    Ok(best.expect("at least one candidate radius"))
}
