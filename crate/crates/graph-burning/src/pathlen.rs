//! Burning with a path decomposition of length pl: burn a spine path
//! between the private end vertices in ⌈√(d−1)⌉ rounds, then let pl more
//! rounds finish every bag. Includes the grid column-pair decomposition.

use crate::ceil_sqrt;
use crate::decomp::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::process::{
    exact_burning_number, pad_to_completion, simulate, BurningSchedule, ExactOutcome,
};

/// Result of the path-length burner.
#[derive(Debug, Clone)]
pub struct PathlenResult {
    pub schedule: BurningSchedule,
    /// Certified completion bound: ⌈√(d−1)⌉ + pl (or 1 + pl for a
    /// single-bag decomposition, or the exact optimum when d < 2).
    pub bound: usize,
    /// Simulated completion of `schedule`.
    pub completion: usize,
    /// The spine and its schedule, when the spine route was taken.
    pub spine: Option<SpinePlan>,
}

#[derive(Debug, Clone)]
pub struct SpinePlan {
    /// Private end vertices: x ∈ B_1 \ B_2 and y ∈ B_ξ \ B_{ξ−1}.
    pub x: usize,
    pub y: usize,
    /// Shortest path between x' and y', the inner neighbors of x and y
    /// on the x–y shortest path.
    pub spine: Vec<usize>,
    /// (spine position, round) pairs for the spine activators.
    pub spine_schedule: Vec<(usize, usize)>,
    pub total_bound: usize,
}

/// Activator layout burning a path of m+1 vertices in k = ⌈√(m+1)⌉
/// rounds: round i owns a segment of 2(k−i)+1 consecutive positions,
/// laid left to right, with the activator at its middle. Positions past
/// the end of the path are clamped to the last vertex.
pub fn path_burn_schedule(m_plus_1: usize) -> Vec<(usize, usize)> {
    assert!(m_plus_1 >= 1);
    let k = ceil_sqrt(m_plus_1 as u64) as usize;
    let mut out = Vec::with_capacity(k);
    let mut consumed = 0;
    for i in 1..=k {
        let seg = 2 * (k - i) + 1;
        let pos = (consumed + (k - i)).min(m_plus_1 - 1);
        out.push((pos, i));
        consumed += seg;
    }
    out
}

/// Drops end bags contained in their unique neighbor until both ends own
/// a private vertex, or a single bag remains.
pub fn normalize_path_decomposition(t: &Decomposition) -> Result<Decomposition> {
    let order = t.chain_order()?;
    let mut bags: Vec<Vec<usize>> = order.iter().map(|&i| t.bag(i).to_vec()).collect();
    loop {
        if bags.len() == 1 {
            break;
        }
        if bags[0].iter().all(|v| bags[1].contains(v)) {
            bags.remove(0);
            continue;
        }
        let last = bags.len() - 1;
        if bags[last].iter().all(|v| bags[last - 1].contains(v)) {
            bags.remove(last);
            continue;
        }
        break;
    }
    let parent = (0..bags.len())
        .map(|i| if i == 0 { None } else { Some(i - 1) })
        .collect();
    Decomposition::new(bags, parent, 0)
}

/// Burns `g` using a path decomposition. Certifies completion within
/// ⌈√(d−1)⌉ + pl rounds for diameter d ≥ 2; smaller diameters fall back
/// to the exact solver.
pub fn burn_pathlen(g: &Graph, t: &Decomposition) -> Result<PathlenResult> {
    if t.kind() != DecompositionKind::Path {
        return Err(Error::InvalidDecomposition(
            "path-length burner needs a path decomposition".into(),
        ));
    }
    t.validate(g)?;
    let metrics = g.metrics()?;
    let d = metrics.diameter;
    let pl = t.length_of(g)?.length;

    if d < 2 {
        // the ⌈√(d−1)⌉ + pl bound has no content here; solve exactly
        let ExactOutcome::Solved { rounds, schedule } = exact_burning_number(g, None)? else {
            unreachable!("no budget given");
        };
        let completion = simulate(g, &schedule)?.rounds_used(schedule.len()).unwrap();
        return Ok(PathlenResult {
            schedule,
            bound: rounds,
            completion,
            spine: None,
        });
    }

    let norm = normalize_path_decomposition(t)?;
    let order = norm.chain_order()?;

    if order.len() == 1 {
        let schedule = pad_to_completion(g, vec![*norm.bag(order[0]).first().unwrap()])?;
        let completion = simulate(g, &schedule)?.rounds_used(schedule.len()).unwrap();
        return Ok(PathlenResult {
            schedule,
            bound: 1 + pl,
            completion,
            spine: None,
        });
    }

    let first = norm.bag(order[0]);
    let second = norm.bag(order[1]);
    let last = norm.bag(*order.last().unwrap());
    let before_last = norm.bag(order[order.len() - 2]);
    let x = *first
        .iter()
        .find(|v| !second.contains(v))
        .expect("normalized: B_1 owns a private vertex");
    let y = *last
        .iter()
        .find(|v| !before_last.contains(v))
        .expect("normalized: B_xi owns a private vertex");

    let xy_path = g.shortest_path(x, y)?;
    // inner neighbors of x and y on the x-y path; for adjacent (or
    // equal) ends these degenerate to the ends themselves
    let x_prime = if xy_path.len() >= 2 { xy_path[1] } else { x };
    let y_prime = if xy_path.len() >= 2 {
        xy_path[xy_path.len() - 2]
    } else {
        y
    };
    let spine = g.shortest_path(x_prime, y_prime)?;
    let spine_schedule = path_burn_schedule(spine.len());
    let k = ceil_sqrt(d as u64 - 1) as usize;
    let bound = k + pl;

    let activators: Vec<usize> = spine_schedule.iter().map(|&(pos, _)| spine[pos]).collect();
    let schedule = pad_to_completion(g, activators)?;
    let completion = simulate(g, &schedule)?.rounds_used(schedule.len()).unwrap();
    Ok(PathlenResult {
        schedule,
        bound,
        completion,
        spine: Some(SpinePlan {
            x,
            y,
            spine,
            spine_schedule,
            total_bound: bound,
        }),
    })
}

/// The n1×n2 grid (n1 rows, n2 columns, vertex r*n2+c) together with the
/// column-pair path decomposition: bag i holds columns i and i+1, giving
/// ξ = n2−1 bags of length n1.
pub fn grid_decomposition(n1: usize, n2: usize) -> Result<(Graph, Decomposition)> {
    if n1 < 1 || n2 < 2 {
        return Err(Error::InvalidInput(
            "grid decomposition needs n1 >= 1 and n2 >= 2".into(),
        ));
    }
    if n1 > n2 {
        return Err(Error::InvalidInput("grid wants n1 <= n2".into()));
    }
    let g = crate::generators::builders::grid(n1, n2);
    let mut bags = Vec::with_capacity(n2 - 1);
    for c in 0..n2 - 1 {
        let mut bag = Vec::with_capacity(2 * n1);
        for r in 0..n1 {
            bag.push(r * n2 + c);
            bag.push(r * n2 + c + 1);
        }
        bags.push(bag);
    }
    let parent = (0..bags.len())
        .map(|i| if i == 0 { None } else { Some(i - 1) })
        .collect();
    let t = Decomposition::new(bags, parent, 0)?;
    Ok((g, t))
}
