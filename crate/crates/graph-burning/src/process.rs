//! Burning-process semantics: schedules, simulation, verification, the
//! diameter lower bound, and the exhaustive exact solver used as the
//! project-wide oracle.
//!
//! Round i ignites activator a_i; every existing fire spreads one hop per
//! round. A vertex v therefore burns in round min_i (i + d(a_i, v)).

use crate::ceil_sqrt;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ordered activator sequence; entry i-1 is the round-i activator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurningSchedule {
    pub activators: Vec<usize>,
}

impl BurningSchedule {
    pub fn new(activators: Vec<usize>) -> Self {
        BurningSchedule { activators }
    }

    pub fn len(&self) -> usize {
        self.activators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.activators.is_empty()
    }

    /// Activating an already-burned vertex is legal but wasted; this
    /// reports whether any activator repeats.
    pub fn has_duplicates(&self) -> bool {
        let mut seen = vec![];
        for &a in &self.activators {
            if seen.contains(&a) {
                return true;
            }
            seen.push(a);
        }
        false
    }
}

/// Per-vertex burn rounds for a (graph, schedule) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnReport {
    /// Round at which fire reaches each vertex; None if it never does.
    pub burn_round: Vec<Option<usize>>,
    /// max_v burn_round(v), when every vertex burns.
    pub completion_round: Option<usize>,
    pub complete: bool,
}

impl BurnReport {
    /// Rounds the schedule takes overall: a schedule of length L cannot
    /// complete before round L even if fire arrives everywhere earlier.
    pub fn rounds_used(&self, schedule_len: usize) -> Option<usize> {
        self.completion_round.map(|c| c.max(schedule_len))
    }
}

/// Runs the burning process for `schedule` on `g`.
pub fn simulate(g: &Graph, schedule: &BurningSchedule) -> Result<BurnReport> {
    let n = g.vertex_count();
    if n > 0 && schedule.is_empty() {
        return Err(Error::InvalidInput(
            "empty schedule on nonempty graph".into(),
        ));
    }
    for &a in &schedule.activators {
        if a >= n {
            return Err(Error::InvalidInput(format!(
                "activator {a} out of range for n = {n}"
            )));
        }
    }
    let mut burn_round = vec![None; n];
    for (idx, &a) in schedule.activators.iter().enumerate() {
        let round = idx + 1;
        let oracle = g.bfs(a)?;
        for (v, slot) in burn_round.iter_mut().enumerate() {
            if let Some(d) = oracle.distance(v) {
                let arrival = round + d;
                if slot.is_none_or(|cur| arrival < cur) {
                    *slot = Some(arrival);
                }
            }
        }
    }
    let complete = burn_round.iter().all(|r| r.is_some());
    let completion_round = if complete {
        burn_round.iter().map(|r| r.unwrap()).max()
    } else {
        None
    };
    Ok(BurnReport {
        burn_round,
        completion_round,
        complete,
    })
}

/// True iff `schedule` burns all of `g` within `k` rounds. This requires
/// both len(schedule) ≤ k and every vertex burned by round k.
pub fn verify(g: &Graph, schedule: &BurningSchedule, k: usize) -> Result<bool> {
    if schedule.len() > k {
        return Ok(false);
    }
    let report = simulate(g, schedule)?;
    Ok(report.complete && report.completion_round.unwrap() <= k)
}

/// Any schedule needs at least ⌈√(d+1)⌉ rounds on a graph of diameter d.
pub fn lower_bound_diameter(diameter: usize) -> usize {
    ceil_sqrt(diameter as u64 + 1) as usize
}

/// Extends `activators` round by round with the lowest-id vertex the
/// fire has not yet reached, until everything burns. Appending never
/// increases the completion round.
pub fn pad_to_completion(g: &Graph, mut activators: Vec<usize>) -> Result<BurningSchedule> {
    let n = g.vertex_count();
    let mut burn: Vec<Option<usize>> = vec![None; n];
    let relax = |burn: &mut Vec<Option<usize>>, a: usize, round: usize| -> Result<()> {
        let o = g.bfs(a)?;
        for (v, slot) in burn.iter_mut().enumerate() {
            if let Some(d) = o.distance(v) {
                let arrival = round + d;
                if slot.is_none_or(|cur| arrival < cur) {
                    *slot = Some(arrival);
                }
            }
        }
        Ok(())
    };
    for (idx, &a) in activators.iter().enumerate() {
        relax(&mut burn, a, idx + 1)?;
    }
    loop {
        let round = activators.len() + 1;
        // unburned when round `round` begins: fire arrives strictly later
        match (0..n).find(|&v| burn[v].is_none_or(|b| b > round)) {
            Some(v) => {
                activators.push(v);
                relax(&mut burn, v, round)?;
            }
            None => break,
        }
    }
    Ok(BurningSchedule::new(activators))
}

/// Outcome of the exact solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Solved {
        rounds: usize,
        schedule: BurningSchedule,
    },
    BudgetExceeded {
        budget: usize,
    },
}

/// Exhaustive exact burning number. Enumerates k ascending; for each k,
/// schedules of length 1..=k in lexicographic order, returning the first
/// witness. Cost grows as n^k, so this is for desk-scale instances.
pub fn exact_burning_number(g: &Graph, budget: Option<usize>) -> Result<ExactOutcome> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // all-pairs distances once; verify(prefix, k) then costs O(len * n)
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let o = g.bfs(v).unwrap();
            (0..n).map(|w| o.distance(w).unwrap()).collect()
        })
        .collect();

    let start = lower_bound_diameter(dist.iter().flatten().copied().max().unwrap());
    for k in start..=n {
        if let Some(max) = budget {
            if k > max {
                return Ok(ExactOutcome::BudgetExceeded { budget: max });
            }
        }
        for len in 1..=k.min(n) {
            if let Some(witness) = search_schedules(&dist, n, k, len, &mut Vec::new()) {
                return Ok(ExactOutcome::Solved {
                    rounds: k,
                    schedule: BurningSchedule::new(witness),
                });
            }
        }
    }
    unreachable!("the all-vertices schedule always completes in n rounds");
}

/// Depth-first lexicographic enumeration of length-`len` schedules,
/// checked for completion within `k` rounds. On the final position the
/// remaining activator must personally cover every still-uncovered
/// vertex within radius k - len, which keeps the last level cheap.
fn search_schedules(
    dist: &[Vec<usize>],
    n: usize,
    k: usize,
    len: usize,
    prefix: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let covered = |v: usize, prefix: &[usize]| {
        prefix
            .iter()
            .enumerate()
            .any(|(idx, &a)| idx + 1 + dist[a][v] <= k)
    };
    if prefix.len() + 1 == len {
        let uncovered: Vec<usize> = (0..n).filter(|&v| !covered(v, prefix)).collect();
        let reach = k - len; // len <= k always holds here
        for (a, from_a) in dist.iter().enumerate() {
            if uncovered.iter().all(|&v| from_a[v] <= reach) {
                let mut witness = prefix.clone();
                witness.push(a);
                return Some(witness);
            }
        }
        return None;
    }
    for a in 0..n {
        prefix.push(a);
        if let Some(w) = search_schedules(dist, n, k, len, prefix) {
            return Some(w);
        }
        prefix.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::builders::{complete, grid, path, star};
    use crate::Graph;

    #[test]
    fn simulate_k1() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let r = simulate(&g, &BurningSchedule::new(vec![0])).unwrap();
        assert_eq!(r.completion_round, Some(1));
    }

    #[test]
    fn simulate_p4_two_activators() {
        let g = path(4);
        let r = simulate(&g, &BurningSchedule::new(vec![1, 3])).unwrap();
        assert_eq!(r.burn_round, vec![Some(2), Some(1), Some(2), Some(2)]);
        assert_eq!(r.completion_round, Some(2));
    }

    #[test]
    fn simulate_star_center() {
        let g = star(5);
        let r = simulate(&g, &BurningSchedule::new(vec![0])).unwrap();
        assert_eq!(r.completion_round, Some(2));
    }

    #[test]
    fn simulate_rejects_empty_schedule() {
        let g = path(3);
        assert!(simulate(&g, &BurningSchedule::new(vec![])).is_err());
    }

    #[test]
    fn verify_examples() {
        let g = complete(5);
        assert!(!verify(&g, &BurningSchedule::new(vec![0]), 1).unwrap());
        assert!(verify(&g, &BurningSchedule::new(vec![0]), 2).unwrap());
        let p = path(9);
        let all = BurningSchedule::new((0..9).collect());
        assert!(verify(&p, &all, 9).unwrap());
    }

    #[test]
    fn verify_p9_optimal_layout() {
        // layout from the exact solver: activators at 2, 6, 8
        let p = path(9);
        assert!(verify(&p, &BurningSchedule::new(vec![2, 6, 8]), 3).unwrap());
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(lower_bound_diameter(8), 3);
        assert_eq!(lower_bound_diameter(0), 1);
        assert_eq!(lower_bound_diameter(3), 2);
    }

    #[test]
    fn exact_small_cases() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        match exact_burning_number(&k1, None).unwrap() {
            ExactOutcome::Solved { rounds, .. } => assert_eq!(rounds, 1),
            _ => panic!("budget"),
        }
        match exact_burning_number(&path(9), None).unwrap() {
            ExactOutcome::Solved { rounds, schedule } => {
                assert_eq!(rounds, 3);
                assert!(verify(&path(9), &schedule, 3).unwrap());
            }
            _ => panic!("budget"),
        }
        match exact_burning_number(&grid(3, 3), None).unwrap() {
            ExactOutcome::Solved { rounds, .. } => assert_eq!(rounds, 3),
            _ => panic!("budget"),
        }
    }

    #[test]
    fn exact_budget_exceeded() {
        let g = path(9);
        match exact_burning_number(&g, Some(2)).unwrap() {
            ExactOutcome::BudgetExceeded { budget } => assert_eq!(budget, 2),
            _ => panic!("P_9 needs 3 rounds, budget 2 must be exceeded"),
        }
    }

    #[test]
    fn exact_is_deterministic() {
        let a = exact_burning_number(&path(7), None).unwrap();
        let b = exact_burning_number(&path(7), None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn monotonicity_of_verify() {
        let g = grid(3, 3);
        let s = BurningSchedule::new(vec![4, 0]);
        for k in 1..8 {
            if verify(&g, &s, k).unwrap() {
                assert!(verify(&g, &s, k + 1).unwrap());
            }
        }
    }

    #[test]
    fn appending_activator_never_hurts() {
        let g = grid(3, 4);
        let base = BurningSchedule::new(vec![5]);
        let r0 = simulate(&g, &base).unwrap();
        for extra in 0..g.vertex_count() {
            let mut act = base.activators.clone();
            act.push(extra);
            let r1 = simulate(&g, &BurningSchedule::new(act)).unwrap();
            assert!(r1.completion_round.unwrap() <= r0.completion_round.unwrap());
        }
    }
}
