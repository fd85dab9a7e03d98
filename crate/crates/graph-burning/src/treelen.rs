//! Guess-and-mark burner for graphs with a tree decomposition of length
//! tl. For a guess g it either certifies that no schedule finishes
//! within g rounds or produces one finishing within 2g + 4tl + 1 rounds;
//! scanning for the smallest successful guess yields an approximation
//! interval [g*, 2g* + 4tl + 1] around the burning number.

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::process::BurningSchedule;

/// Per-iteration record of the guess procedure.
#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub iteration: usize,
    /// Farthest unmarked vertex from the origin.
    pub terminal: usize,
    /// Minimum-depth bag containing the terminal.
    pub terminal_bag: usize,
    /// Bag reached by walking toward the root.
    pub chosen_bag: usize,
    pub activator: usize,
    /// Marking radius used this iteration: (2g − i + 1) + 4·tl.
    pub mark_radius: usize,
    pub marked_count: usize,
}

#[derive(Debug, Clone)]
pub enum GuessOutcome {
    NoSchedule {
        trace: Vec<IterationTrace>,
    },
    Schedule {
        schedule: BurningSchedule,
        trace: Vec<IterationTrace>,
    },
}

impl GuessOutcome {
    pub fn trace(&self) -> &[IterationTrace] {
        match self {
            GuessOutcome::NoSchedule { trace } => trace,
            GuessOutcome::Schedule { trace, .. } => trace,
        }
    }

    pub fn schedule(&self) -> Option<&BurningSchedule> {
        match self {
            GuessOutcome::Schedule { schedule, .. } => Some(schedule),
            GuessOutcome::NoSchedule { .. } => None,
        }
    }
}

/// Result of scanning for the smallest successful guess.
#[derive(Debug, Clone)]
pub struct TreelenResult {
    /// Smallest g for which a schedule was returned.
    pub g_star: usize,
    pub schedule: BurningSchedule,
    /// 2g* + 4tl + 1.
    pub upper: usize,
    /// g*; a genuine lower bound on the burning number when the scan saw
    /// NoSchedule at g* − 1 (trivially valid at g* = 1).
    pub lower: usize,
    /// (2g* + 4tl + 1) / g* = 2 + (4tl + 1)/g*.
    pub ratio_bound: f64,
    /// Tree-length actually used, recomputed from the decomposition.
    pub tl: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Ascending scan g = 1, 2, ...; the NoSchedule at g*−1 is the
    /// lower-bound certificate.
    Linear,
    /// Binary search over [1, d]. Success of the guess procedure is not
    /// known to be monotone in g, so the result is cross-checked at
    /// g*−1 and the scan falls back to linear if the check fails.
    Binary,
}

/// One run of the guess-and-mark procedure with guess `g`.
///
/// The decomposition's own root bag is used; the origin is the lowest-id
/// vertex of the root bag. All argmax/argmin ties resolve to the lowest
/// vertex id or bag index.
pub fn burn_guess(graph: &Graph, t: &Decomposition, tl: usize, g: usize) -> Result<GuessOutcome> {
    if g == 0 {
        return Err(Error::InvalidInput("guess must be >= 1".into()));
    }
    t.validate(graph)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = graph.vertex_count();
    let root = t.root();
    let origin = *t
        .bag(root)
        .first()
        .ok_or_else(|| Error::InvalidDecomposition("root bag is empty".into()))?;
    let from_origin = graph.bfs(origin)?;
    let depths = t.depths();

    let mut marked = vec![false; n];
    let mut activators = Vec::new();
    let mut trace = Vec::new();
    let mut i = 0;
    while i <= g && marked.iter().any(|&m| !m) {
        i += 1;
        // farthest unmarked vertex from the origin, lowest id on ties
        let terminal = (0..n)
            .filter(|&v| !marked[v])
            .max_by_key(|&v| (from_origin.distance(v).unwrap(), std::cmp::Reverse(v)))
            .unwrap();
        let from_terminal = graph.bfs(terminal)?;
        // minimum-depth bag containing the terminal, lowest index on ties
        let terminal_bag = (0..t.bag_count())
            .filter(|&b| t.bag(b).contains(&terminal))
            .min_by_key(|&b| (depths[b], b))
            .expect("valid decomposition covers every vertex");
        // walk toward the root while the current bag still has a vertex
        // within distance g-1 of the terminal
        let mut bag = terminal_bag;
        while bag != root
            && t.bag(bag)
                .iter()
                .any(|&v| from_terminal.distance(v).unwrap() < g)
        {
            bag = t.parent(bag).unwrap();
        }
        let activator = *t.bag(bag).first().unwrap();
        activators.push(activator);
        let mark_radius = (2 * g - i + 1) + 4 * tl;
        let from_activator = graph.bfs(activator)?;
        for (v, m) in marked.iter_mut().enumerate() {
            if from_activator.distance(v).unwrap() <= mark_radius {
                *m = true;
            }
        }
        trace.push(IterationTrace {
            iteration: i,
            terminal,
            terminal_bag,
            chosen_bag: bag,
            activator,
            mark_radius,
            marked_count: marked.iter().filter(|&&m| m).count(),
        });
    }

    if marked.iter().all(|&m| m) {
        Ok(GuessOutcome::Schedule {
            schedule: BurningSchedule::new(activators),
            trace,
        })
    } else {
        Ok(GuessOutcome::NoSchedule { trace })
    }
}

/// Finds the smallest guess with a schedule and packages the
/// approximation certificate. `tl` is always recomputed from the
/// decomposition rather than trusted from metadata.
pub fn search_g_star(graph: &Graph, t: &Decomposition, mode: SearchMode) -> Result<TreelenResult> {
    t.validate(graph)?;
    let tl = t.length_of(graph)?.length;
    let d = graph.metrics()?.diameter;
    let hi = d.max(1);

    let found = match mode {
        SearchMode::Linear => linear_scan(graph, t, tl, 1, hi)?,
        SearchMode::Binary => {
            let mut lo = 1;
            let mut high = hi;
            let mut best: Option<(usize, BurningSchedule)> = None;
            while lo <= high {
                let mid = lo + (high - lo) / 2;
                match burn_guess(graph, t, tl, mid)? {
                    GuessOutcome::Schedule { schedule, .. } => {
                        best = Some((mid, schedule));
                        if mid == 1 {
                            break;
                        }
                        high = mid - 1;
                    }
                    GuessOutcome::NoSchedule { .. } => lo = mid + 1,
                }
            }
            match best {
                Some((g, schedule)) => {
                    // cross-check the lower-bound certificate; success is
                    // not proven monotone in g
                    if g == 1
                        || matches!(
                            burn_guess(graph, t, tl, g - 1)?,
                            GuessOutcome::NoSchedule { .. }
                        )
                    {
                        Some((g, schedule))
                    } else {
                        linear_scan(graph, t, tl, 1, hi)?
                    }
                }
                None => linear_scan(graph, t, tl, 1, hi)?,
            }
        }
    };

    let (g_star, schedule) = found.ok_or_else(|| {
        Error::InvalidInput(format!(
            "no guess up to the diameter {hi} produced a schedule; this should be impossible"
        ))
    })?;
    let upper = 2 * g_star + 4 * tl + 1;
    Ok(TreelenResult {
        g_star,
        schedule,
        upper,
        lower: g_star,
        ratio_bound: 2.0 + (4.0 * tl as f64 + 1.0) / g_star as f64,
        tl,
    })
}

fn linear_scan(
    graph: &Graph,
    t: &Decomposition,
    tl: usize,
    lo: usize,
    hi: usize,
) -> Result<Option<(usize, BurningSchedule)>> {
    for g in lo..=hi {
        if let GuessOutcome::Schedule { schedule, .. } = burn_guess(graph, t, tl, g)? {
            return Ok(Some((g, schedule)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ceil_sqrt;
    use crate::generators::builders::{path, star};
    use crate::process::simulate;
    use crate::Graph;

    fn pair_bags_chain(n: usize) -> Decomposition {
        let bags: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let parent = (0..n - 1)
            .map(|i| if i == 0 { None } else { Some(i - 1) })
            .collect();
        Decomposition::new(bags, parent, 0).unwrap()
    }

    fn star_decomp(leaves: usize) -> Decomposition {
        let bags: Vec<Vec<usize>> = (1..=leaves).map(|l| vec![0, l]).collect();
        let parent = (0..leaves)
            .map(|i| if i == 0 { None } else { Some(0) })
            .collect();
        Decomposition::new(bags, parent, 0).unwrap()
    }

    #[test]
    fn k1_trivial_schedule() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let t = Decomposition::new(vec![vec![0]], vec![None], 0).unwrap();
        match burn_guess(&g, &t, 0, 1).unwrap() {
            GuessOutcome::Schedule { schedule, .. } => {
                assert_eq!(schedule.activators, vec![0]);
            }
            GuessOutcome::NoSchedule { .. } => panic!("K_1 must get a schedule"),
        }
    }

    #[test]
    fn p25_guess_1_fails() {
        let g = path(25);
        let t = pair_bags_chain(25);
        assert!(matches!(
            burn_guess(&g, &t, 1, 1).unwrap(),
            GuessOutcome::NoSchedule { .. }
        ));
        // bn(P_25) = 5 > 1, so the refusal is sound
        assert_eq!(ceil_sqrt(25), 5);
    }

    #[test]
    fn mark_radius_matches_definition() {
        let g = path(20);
        let t = pair_bags_chain(20);
        let out = burn_guess(&g, &t, 1, 2).unwrap();
        for rec in out.trace() {
            assert_eq!(rec.mark_radius, (2 * 2 - rec.iteration + 1) + 4);
        }
    }

    #[test]
    fn star_g_star_is_one() {
        let g = star(9);
        let t = star_decomp(9);
        let res = search_g_star(&g, &t, SearchMode::Linear).unwrap();
        assert_eq!(res.g_star, 1);
        assert_eq!(res.tl, 1);
        assert_eq!(res.upper, 7); // 2 + 4 + 1
    }

    #[test]
    fn p50_certificate_brackets_bn() {
        let g = path(50);
        let t = pair_bags_chain(50);
        let res = search_g_star(&g, &t, SearchMode::Linear).unwrap();
        assert_eq!(res.upper, 2 * res.g_star + 5);
        let bn = ceil_sqrt(50) as usize; // 8
        assert!(res.lower <= bn && bn <= res.upper);
        let report = simulate(&g, &res.schedule).unwrap();
        assert!(report.rounds_used(res.schedule.len()).unwrap() <= res.upper);
    }

    #[test]
    fn binary_matches_linear_on_paths() {
        for n in [5, 10, 30, 50] {
            let g = path(n);
            let t = pair_bags_chain(n);
            let a = search_g_star(&g, &t, SearchMode::Linear).unwrap();
            let b = search_g_star(&g, &t, SearchMode::Binary).unwrap();
            assert_eq!(a.g_star, b.g_star, "P_{n}");
        }
    }

    #[test]
    fn schedules_respect_upper_bound() {
        for n in [10, 25, 40] {
            let g = path(n);
            let t = pair_bags_chain(n);
            let d = g.metrics().unwrap().diameter;
            for guess in 1..=d {
                if let GuessOutcome::Schedule { schedule, .. } =
                    burn_guess(&g, &t, 1, guess).unwrap()
                {
                    let r = simulate(&g, &schedule).unwrap();
                    assert!(
                        r.rounds_used(schedule.len()).unwrap() <= 2 * guess + 4 + 1,
                        "P_{n} at guess {guess}"
                    );
                }
            }
        }
    }

    #[test]
    fn each_iteration_marks_its_terminal() {
        let g = path(30);
        let t = pair_bags_chain(30);
        let out = burn_guess(&g, &t, 1, 3).unwrap();
        for rec in out.trace() {
            let o = g.bfs(rec.activator).unwrap();
            assert!(o.distance(rec.terminal).unwrap() <= rec.mark_radius);
        }
    }

    #[test]
    fn rejects_zero_guess() {
        let g = path(3);
        let t = pair_bags_chain(3);
        assert!(burn_guess(&g, &t, 1, 0).is_err());
    }
}
