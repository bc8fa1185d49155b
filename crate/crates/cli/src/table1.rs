//! Critical exponents of the standard chordal families, computed with the
//! clique formula and compared against their closed forms.

use serde::Serialize;

use chordpow::exponent::critical_exponent_clique_formula;
use chordpow::{Graph, GraphFamily, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub closed_form: String,
    pub expected: usize,
    pub computed: usize,
    pub matches: bool,
}

/// Triangulation of the `n`-cycle `1 - 2 - ... - n - 1` whose chords zigzag
/// across: consecutive entries of `1, 2, n, 3, n-1, ...` are joined.
pub fn zigzag_triangulation(n: usize) -> Result<Graph> {
    let mut g = GraphFamily::Cycle { n }.generate()?;
    let mut seq = vec![0];
    let (mut lo, mut hi) = (1, n - 1);
    while lo <= hi {
        seq.push(lo);
        if lo != hi {
            seq.push(hi);
        }
        lo += 1;
        hi -= 1;
    }
    for w in seq.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    Ok(g)
}

/// One generated graph with its closed-form critical exponent.
#[derive(Debug, Clone)]
pub struct Table1Case {
    pub family: String,
    pub params: String,
    pub closed_form: String,
    pub graph: Graph,
    pub expected: usize,
}

fn row(family: &str, params: String, closed_form: &str, g: &Graph, expected: usize) -> Result<Table1Case> {
    Ok(Table1Case {
        family: family.into(),
        params,
        closed_form: closed_form.into(),
        graph: g.clone(),
        expected,
    })
}

/// Rows for `3 ≤ n ≤ n_max`, computed with the clique formula.
pub fn table1_rows(n_max: usize) -> Result<Vec<Table1Row>> {
    table1_cases(n_max)?
        .into_iter()
        .map(|c| {
            let computed = critical_exponent_clique_formula(&c.graph)?;
            Ok(Table1Row {
                family: c.family,
                params: c.params,
                n: c.graph.n(),
                closed_form: c.closed_form,
                expected: c.expected,
                computed,
                matches: computed == c.expected,
            })
        })
        .collect()
}

/// Every graph of the table for `3 ≤ n ≤ n_max`.
pub fn table1_cases(n_max: usize) -> Result<Vec<Table1Case>> {
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for seed in 0..3 {
            let g = GraphFamily::Tree { n, seed }.generate()?;
            rows.push(row("tree", format!("seed={seed}"), "1", &g, 1)?);
        }
        let g = GraphFamily::Complete { n }.generate()?;
        rows.push(row("complete", String::new(), "n-2", &g, n - 2)?);
        if n >= 4 {
            let g = zigzag_triangulation(n)?;
            rows.push(row("cycle-triangulation", "zigzag".into(), "2", &g, 2)?);
            let g = GraphFamily::MaxOuterplanar { n }.generate()?;
            rows.push(row("cycle-triangulation", "fan".into(), "2", &g, 2)?);
        }
        for seed in 0..3 {
            let g = GraphFamily::Apollonian { n, seed }.generate()?;
            rows.push(row("apollonian", format!("seed={seed}"), "min(3,n-2)", &g, 3.min(n - 2))?);
        }
        let g = GraphFamily::MaxOuterplanar { n }.generate()?;
        rows.push(row("max-outerplanar", String::new(), "min(2,n-2)", &g, 2.min(n - 2))?);
        for d in 1..=n {
            let g = GraphFamily::Band { n, d }.generate()?;
            rows.push(row("band", format!("d={d}"), "min(d,n-2)", &g, d.min(n - 2))?);
        }
        for c in 2..n {
            for max_degree in [c / 2, c - 1] {
                for seed in 0..2 {
                    let g = GraphFamily::Split {
                        clique_size: c,
                        independent_size: n - c,
                        max_degree,
                        seed,
                    }
                    .generate()?;
                    let max_deg = (c..n).map(|v| g.degree(v)).max().unwrap_or(0);
                    rows.push(row(
                        "split",
                        format!("|C|={c} max_degree={max_degree} seed={seed}"),
                        "max(|C|-2, max deg(V∖C))",
                        &g,
                        (c - 2).max(max_deg),
                    )?);
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordpow::chordal::is_chordal;

    #[test]
    fn zigzag_is_a_triangulation() {
        for n in 4..12 {
            let g = zigzag_triangulation(n).unwrap();
            assert!(is_chordal(&g));
            assert_eq!(g.edge_count(), 2 * n - 3);
        }
    }

    #[test]
    fn spot_rows() {
        let rows = table1_rows(5).unwrap();
        assert!(rows.iter().all(|r| r.matches));
        let apollonian3 = rows.iter().find(|r| r.family == "apollonian" && r.n == 3).unwrap();
        assert_eq!(apollonian3.computed, 1);
        let outer5 = rows.iter().find(|r| r.family == "max-outerplanar" && r.n == 5).unwrap();
        assert_eq!(outer5.computed, 2);
    }
}
