use super::hset::{HSet, Lattice, Shape};
use crate::chordal::{is_chordal, maximal_cliques};
use crate::cones::PowerFamily;
use crate::error::{domain, Result};
use crate::graph::{max_near_complete_order_fast, Graph};

/// Exponents preserving positivity on all `n x n` matrices of the family's
/// domain: lattice plus `[n-2, ∞)`.
pub fn hset_complete(n: usize, family: PowerFamily) -> Result<HSet> {
    if n < 2 {
        return domain(format!("complete graph needs at least 2 vertices, got {n}"));
    }
    Ok(HSet::exact(Shape::new(Lattice::for_family(family), (n - 2) as f64)))
}

/// Exact set for a chordal graph: lattice plus `[r-2, ∞)` with `r` the
/// largest order of an embedded `K_r` minus one edge.
pub fn hset_chordal(g: &Graph, family: PowerFamily) -> Result<HSet> {
    if g.n() < 2 {
        return domain(format!("graph needs at least 2 vertices, got {}", g.n()));
    }
    if !is_chordal(g) {
        return domain(
            "graph is not chordal; no exact formula applies, use estimate_ce_numeric",
        );
    }
    let r = max_near_complete_order_fast(g)?;
    Ok(HSet::exact(Shape::new(Lattice::for_family(family), (r - 2) as f64)))
}

/// Largest entry of `M^T M - 2I` for the vertex-by-clique incidence matrix
/// `M` of a chordal graph. Components need no special handling: cliques in
/// different components have zero overlap.
pub fn critical_exponent_clique_formula(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return domain(format!("graph needs at least 2 vertices, got {}", g.n()));
    }
    if !is_chordal(g) {
        return domain("clique formula requires a chordal graph");
    }
    let cliques = maximal_cliques(g);
    let mut incidence = vec![vec![0i64; cliques.len()]; g.n()];
    for (j, c) in cliques.iter().enumerate() {
        for &v in c {
            incidence[v][j] = 1;
        }
    }
    let mut best = i64::MIN;
    for i in 0..cliques.len() {
        for j in 0..cliques.len() {
            let dot: i64 = incidence.iter().map(|row| row[i] * row[j]).sum();
            best = best.max(dot - if i == j { 2 } else { 0 });
        }
    }
    // An edgeless graph on n >= 2 vertices has overlap 0 between two cliques.
    Ok(best.max(0) as usize)
}

/// Loewner super-additive powers on `n x n` matrices: lattice plus
/// `[n, ∞)`. For `n = 1` the same formula gives the scalar answer.
pub fn superadditive_powers(n: usize, family: PowerFamily) -> Result<HSet> {
    if n < 1 {
        return domain("super-additivity needs n >= 1");
    }
    Ok(HSet::exact(Shape::new(Lattice::for_family(family), n as f64)))
}

/// Power sets of the cycle `C_n`. The even family is known exactly only for
/// `n ≤ 4`; beyond that it is bracketed by `[2,∞)` and `[1,∞)`, with `1`
/// excluded for even `n`.
pub fn hset_cycle(n: usize, family: PowerFamily) -> Result<HSet> {
    if n < 3 {
        return domain(format!("cycle needs at least 3 vertices, got {n}"));
    }
    Ok(match (family, n) {
        (PowerFamily::Plain | PowerFamily::Odd, _) => HSet::exact(Shape::ray(1.0)),
        // C_3 = K_3.
        (PowerFamily::Even, 3) => HSet::exact(Shape::ray(1.0)),
        (PowerFamily::Even, 4) => HSet::exact(Shape::ray(2.0)),
        (PowerFamily::Even, _) => HSet::partial(
            Shape::ray(2.0),
            Shape::ray(1.0),
            if n % 2 == 0 { vec![1.0] } else { Vec::new() },
        ),
    })
}

/// True when `g` is bipartite, contains `K_{2,2}` and lies inside some
/// `K_{2,m}`: one colour class has exactly two vertices with at least two
/// common neighbours.
pub fn is_between_k22_and_k2m(g: &Graph) -> bool {
    let Some(colour) = g.bipartition() else {
        return false;
    };
    [false, true].iter().any(|&side| {
        let class: Vec<usize> = (0..g.n()).filter(|&v| colour[v] == side).collect();
        class.len() == 2
            && g.neighbors(class[0])
                .intersection(g.neighbors(class[1]))
                .count()
                >= 2
    })
}

/// Power sets of a connected bipartite graph on at least 3 vertices.
pub fn hset_bipartite(g: &Graph, family: PowerFamily) -> Result<HSet> {
    if g.n() < 3 {
        return domain(format!("bipartite case needs at least 3 vertices, got {}", g.n()));
    }
    if !g.is_connected() {
        return domain("bipartite case requires a connected graph");
    }
    if g.bipartition().is_none() {
        return domain("graph is not bipartite");
    }
    let k2m = is_between_k22_and_k2m(g);
    Ok(match family {
        PowerFamily::Plain => HSet::exact(Shape::ray(1.0)),
        PowerFamily::Even if k2m => HSet::exact(Shape::ray(2.0)),
        PowerFamily::Even => HSet::partial(Shape::ray(2.0), Shape::ray(1.0), Vec::new()),
        PowerFamily::Odd => {
            let start = if k2m { 2.0 } else { 3.0 };
            HSet::partial(
                Shape::ray(start).with_points(&[1.0]),
                Shape::ray(1.0),
                Vec::new(),
            )
        }
    })
}
