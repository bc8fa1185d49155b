use std::fs;

use chordpow::{Graph, GraphFamily};

use crate::args::{FamilyName, GraphArgs};

/// The graph named by a file or by `--family` flags, never both.
pub fn load_graph(args: &GraphArgs, run_seed: u64) -> Result<Graph, String> {
    match (&args.input, args.family) {
        (Some(_), Some(_)) => Err("give either a graph file or --family, not both".into()),
        (None, None) => Err("no graph given: pass a file or --family".into()),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_graph_text(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(name)) => family_from_args(name, args, run_seed)?
            .generate()
            .map_err(|e| e.to_string()),
    }
}

/// JSON when the first non-blank character is `{`, edge list otherwise.
pub fn parse_graph_text(text: &str) -> chordpow::Result<Graph> {
    if text.trim_start().starts_with('{') {
        Graph::from_json(text)
    } else {
        Graph::parse_edge_list(text)
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("--family {family} needs --{flag}"))
}

fn family_from_args(name: FamilyName, a: &GraphArgs, run_seed: u64) -> Result<GraphFamily, String> {
    let seed = a.graph_seed.unwrap_or(run_seed);
    let n = |f: &str| need(a.n, "n", f);
    Ok(match name {
        FamilyName::Complete => GraphFamily::Complete { n: n("complete")? },
        FamilyName::NearComplete => GraphFamily::NearComplete { n: n("near-complete")? },
        FamilyName::Cycle => GraphFamily::Cycle { n: n("cycle")? },
        FamilyName::Path => GraphFamily::Path { n: n("path")? },
        FamilyName::Tree => GraphFamily::Tree { n: n("tree")?, seed },
        FamilyName::CompleteBipartite => GraphFamily::CompleteBipartite {
            a: need(a.a, "a", "complete-bipartite")?,
            b: need(a.b, "b", "complete-bipartite")?,
        },
        FamilyName::Band => GraphFamily::Band {
            n: n("band")?,
            d: need(a.d, "d", "band")?,
        },
        FamilyName::Split => GraphFamily::Split {
            clique_size: need(a.clique_size, "clique-size", "split")?,
            independent_size: need(a.independent_size, "independent-size", "split")?,
            max_degree: need(a.max_degree, "max-degree", "split")?,
            seed,
        },
        FamilyName::Apollonian => GraphFamily::Apollonian { n: n("apollonian")?, seed },
        FamilyName::MaxOuterplanar => GraphFamily::MaxOuterplanar { n: n("max-outerplanar")? },
        FamilyName::RandomChordal => GraphFamily::RandomChordal {
            n: n("random-chordal")?,
            density: a.density.unwrap_or(0.5),
            seed,
        },
    })
}
