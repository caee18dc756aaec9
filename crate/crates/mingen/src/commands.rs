//! One function per subcommand; each prints its human-readable report to
//! stdout and returns the process exit code.

use std::path::Path;

use cayley::components::{decompose, verify_coset_structure};
use cayley::genset::{
    connectors, minimal_generating_set, rank_upper_bound, ConnectorMode, MinGenResult,
    SelectionPolicy, TraceStep,
};
use cayley::graph::{CayleyDigraph, CayleyGraph, DotOptions};
use cayley::io::resolve_names;
use cayley::oracle::min_generating_set_bruteforce;
use cayley::{Elem, Error, FiniteGroup, GeneratorSet, Result};

use crate::trace;

fn gen_set(group: &FiniteGroup, names: &str) -> Result<GeneratorSet> {
    Ok(resolve_names(group, names)?.into_iter().collect())
}

fn set_names(group: &FiniteGroup, set: &GeneratorSet) -> String {
    if set.is_empty() {
        return "(empty)".into();
    }
    set.iter()
        .map(|e| group.name(e))
        .collect::<Vec<_>>()
        .join(", ")
}

fn braced(group: &FiniteGroup, elems: &[Elem]) -> String {
    format!(
        "{{{}}}",
        elems
            .iter()
            .map(|&e| group.name(e))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

pub fn info(group: &FiniteGroup) -> Result<i32> {
    println!("order: {}", group.order());
    println!("element orders:");
    for g in group.elements() {
        println!("  {} {}", group.name(g), group.element_order(g));
    }
    Ok(0)
}

pub fn cayley(
    group: &FiniteGroup,
    gens_arg: &str,
    dot: Option<&Path>,
    undirected: bool,
) -> Result<i32> {
    let gens = gen_set(group, gens_arg)?;
    let digraph = CayleyDigraph::new(group, &gens);
    let graph = CayleyGraph::from_digraph(&digraph);
    let dstats = digraph.degree_stats();
    let gstats = graph.degree_stats();
    println!("vertices: {}", group.order());
    println!("arcs: {}", digraph.arc_count());
    println!("edges: {}", graph.edge_count());
    println!(
        "digraph: regular, in-degree {}, out-degree {}",
        dstats.in_degree, dstats.out_degree
    );
    println!("graph: regular, degree {}", gstats.degree);
    if let Some(path) = dot {
        let rendered = if undirected {
            graph.to_dot(&DotOptions::default())?
        } else {
            digraph.to_dot(&DotOptions::default())?
        };
        write_file(path, &rendered)?;
    }
    Ok(0)
}

pub fn components(group: &FiniteGroup, gens_arg: &str) -> Result<i32> {
    let gens = gen_set(group, gens_arg)?;
    let graph = CayleyGraph::new(group, &gens);
    let decomposition = decompose(&graph);
    println!("components: {}", decomposition.len());
    for block in decomposition.blocks() {
        println!("  {}", braced(group, block));
    }
    match verify_coset_structure(group, &gens, &decomposition) {
        Ok(()) => println!("coset structure: verified"),
        Err(counterexample) => {
            return Err(Error::Domain(format!(
                "coset structure failed: {counterexample}"
            )))
        }
    }
    Ok(0)
}

pub fn closure(group: &FiniteGroup, gens_arg: &str) -> Result<i32> {
    let gens = gen_set(group, gens_arg)?;
    let subgroup = group.closure(&gens);
    println!(
        "closure (order {}): {}",
        subgroup.order(),
        braced(group, subgroup.elements())
    );
    println!("index: {}", group.index_of(&subgroup));
    Ok(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectorsMode {
    Chain,
    Star,
    Both,
}

pub fn connectors_cmd(group: &FiniteGroup, gens_arg: &str, mode: ConnectorsMode) -> Result<i32> {
    let gens = gen_set(group, gens_arg)?;
    let decomposition = decompose(&CayleyGraph::new(group, &gens));
    println!("components: {}", decomposition.len());
    let report = |label: &str, inner: ConnectorMode| {
        let extended = connectors(group, &gens, &decomposition, inner);
        let connected = decompose(&CayleyGraph::new(group, &extended)).is_connected();
        println!(
            "{label}: {{{}}} -> {}",
            extended
                .iter()
                .map(|e| group.name(e))
                .collect::<Vec<_>>()
                .join(", "),
            if connected {
                "connected"
            } else {
                "disconnected"
            }
        );
    };
    if matches!(mode, ConnectorsMode::Chain | ConnectorsMode::Both) {
        report("S1 (chain)", ConnectorMode::Chain);
    }
    if matches!(mode, ConnectorsMode::Star | ConnectorsMode::Both) {
        report("S2 (star)", ConnectorMode::Star);
    }
    println!("rank bound: {}", rank_upper_bound(group, &gens));
    Ok(0)
}

pub struct MingenArgs<'a> {
    pub start: &'a str,
    pub script: Option<&'a str>,
    pub want_script_policy: bool,
    pub trace_json: Option<&'a Path>,
    pub dot: Option<&'a Path>,
}

pub fn mingen(group: &FiniteGroup, args: &MingenArgs) -> Result<i32> {
    let start = group
        .by_name(args.start)
        .ok_or_else(|| Error::Domain(format!("no element named '{}' in this group", args.start)))?;
    let policy = match args.script {
        Some(names) => SelectionPolicy::Scripted(resolve_names(group, names)?),
        None if args.want_script_policy => {
            return Err(Error::Usage(
                "--policy script needs --script with the picks to use".into(),
            ))
        }
        None => SelectionPolicy::FirstInOrder,
    };
    let result = minimal_generating_set(group, start, policy)?;
    print_run(group, &result);
    if let Some(path) = args.trace_json {
        let records = trace::records_from(group, &result.trace);
        write_file(path, &trace::to_jsonl(&records))?;
    }
    if let Some(path) = args.dot {
        let digraph = CayleyDigraph::new(group, &result.generators);
        write_file(path, &digraph.to_dot(&DotOptions::default())?)?;
    }
    Ok(0)
}

fn print_run(group: &FiniteGroup, result: &MinGenResult) {
    for (i, step) in result.trace.steps.iter().enumerate() {
        let line = match step {
            TraceStep::Grow {
                added,
                chosen: None,
                components,
            } => format!(
                "grow: add {} -> components {}",
                group.name(*added),
                components
            ),
            TraceStep::Grow {
                added,
                chosen: Some(picked),
                components,
            } => format!(
                "grow: add {} (picked {}) -> components {}",
                group.name(*added),
                group.name(*picked),
                components
            ),
            TraceStep::Prune {
                tested,
                connected,
                removed,
            } => format!(
                "prune: test {} -> {}, {}",
                group.name(*tested),
                if *connected {
                    "connected"
                } else {
                    "disconnected"
                },
                if *removed { "removed" } else { "kept" }
            ),
        };
        println!("step {} {}", i + 1, line);
    }
    println!(
        "minimal generating set: {}",
        set_names(group, &result.generators)
    );
    println!("grow size: {}", result.grow_size);
    println!("rank bound: {}", result.rank_bound);
}

pub fn rank(group: &FiniteGroup, cap: Option<usize>) -> Result<i32> {
    let cap = cap.unwrap_or(group.order());
    let certificate = min_generating_set_bruteforce(group, cap)?;
    println!("rank: {}", certificate.rank);
    println!("witness: {}", set_names(group, &certificate.witness));
    Ok(0)
}

pub fn verify_trace(group: &FiniteGroup, path: &Path) -> Result<i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let records = trace::parse_jsonl(&text)?;
    let result = trace::replay(group, &records)?;
    println!("replayed {} steps: ok", records.len());
    println!("final set: {}", set_names(group, &result.generators));
    Ok(0)
}
