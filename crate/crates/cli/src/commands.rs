use std::fs;

use gonal::families::{self, CycleChainSpec};
use gonal::gonality::gonality_with_base;
use gonal::{Error, Graph};
use serde_json::{json, Value};

use crate::report::{digest, digest_args, RunReport};
use crate::{max_n, verify, Cli, CliError, CliResult, Command, EXIT_BUDGET, EXIT_OK};

pub fn run(cli: &Cli, echo: Vec<String>) -> CliResult<(Option<RunReport>, u8)> {
    match &cli.command {
        Command::Construct { family, params, out } => construct(family, params, out.as_deref(), cli.json, echo),
        Command::Gonality { file, budget, base_vertex } => gonality(file, *budget, *base_vertex, echo),
        Command::Verify { claim, params, seed } => {
            let (payload, code) = verify::run(claim, params, *seed)?;
            let input_digest = digest_args(&echo);
            Ok((Some(RunReport { command: echo, input_digest, payload, timing_ms: None }), code))
        }
    }
}

pub fn read_graph(path: &str) -> CliResult<(Graph, Vec<u8>)> {
    let bytes = fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    let text = std::str::from_utf8(&bytes).map_err(|_| CliError::Usage(format!("{path} is not UTF-8")))?;
    Ok((Graph::from_text(text)?, bytes))
}

pub fn check_size(graph: &Graph) -> CliResult<()> {
    let cap = max_n()?;
    if graph.n() > cap {
        return Err(CliError::Precondition(format!(
            "graph has {} vertices, above GONAL_MAX_N={cap}",
            graph.n()
        )));
    }
    Ok(())
}

fn gonality(path: &str, budget: Option<usize>, base: usize, echo: Vec<String>) -> CliResult<(Option<RunReport>, u8)> {
    let (graph, bytes) = read_graph(path)?;
    check_size(&graph)?;
    let budget = budget.unwrap_or(graph.n());
    let mut payload = json!({
        "vertices": graph.n(),
        "edges": graph.edge_count(),
        "budget": budget,
        "base_vertex": base,
    });
    let code = match gonality_with_base(&graph, budget, base) {
        Ok(cert) => {
            let fields = payload.as_object_mut().unwrap();
            fields.insert("status".into(), "determined".into());
            fields.insert("value".into(), cert.value.into());
            fields.insert("witness".into(), cert.witness.values().into());
            fields.insert("exhausted_below".into(), cert.exhausted_below.into());
            EXIT_OK
        }
        Err(Error::BudgetExhausted { budget }) => {
            let fields = payload.as_object_mut().unwrap();
            fields.insert("status".into(), format!("unknown above budget {budget}").into());
            EXIT_BUDGET
        }
        Err(other) => return Err(other.into()),
    };
    let report = RunReport { command: echo, input_digest: digest(&bytes), payload, timing_ms: None };
    Ok((Some(report), code))
}

fn numbers(family: &str, params: &[String], count: usize) -> CliResult<Vec<usize>> {
    if params.len() != count {
        return Err(CliError::Usage(format!("{family} takes {count} parameter(s), got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.parse().map_err(|_| CliError::Usage(format!("{family}: {p:?} is not a count"))))
        .collect()
}

fn construct(
    family: &str,
    params: &[String],
    out: Option<&str>,
    json: bool,
    echo: Vec<String>,
) -> CliResult<(Option<RunReport>, u8)> {
    // (suffix, contents) for every artifact produced
    let artifacts: Vec<(&str, String)> = match family {
        "fan" => {
            let [n] = numbers(family, params, 1)?[..] else { unreachable!() };
            vec![("", families::fan(n)?.to_text())]
        }
        "grid" => {
            let [r, c] = numbers(family, params, 2)?[..] else { unreachable!() };
            vec![("", families::grid(r, c)?.to_text())]
        }
        "cycle" => {
            let [b] = numbers(family, params, 1)?[..] else { unreachable!() };
            vec![("", families::cycle(b)?.to_text())]
        }
        "cycle-chain" => {
            let [g, b, k] = numbers(family, params, 3)?[..] else { unreachable!() };
            vec![("", families::cycle_chain(CycleChainSpec::new(g, b, k)?).graph.to_text())]
        }
        "universal-path" => {
            let [n, k] = numbers(family, params, 2)?[..] else { unreachable!() };
            vec![("", families::universal_path(n, k)?.to_text())]
        }
        "genus-witness" => {
            let [g] = numbers(family, params, 1)?[..] else { unreachable!() };
            vec![("", families::genus_witness(g).to_text())]
        }
        "grid-embedding" => {
            let [t0] = numbers(family, params, 1)?[..] else { unreachable!() };
            let e = families::grid_embedding(t0)?;
            vec![
                ("host", e.host.to_text()),
                ("pattern", e.pattern.graph.to_text()),
                ("certificate", e.certificate.to_text()),
            ]
        }
        "bridge-split" => {
            let [path] = params else {
                return Err(CliError::Usage("bridge-split takes one graph file".into()));
            };
            let (graph, _) = read_graph(path)?;
            vec![("", families::bridge_split(&graph)?.to_text())]
        }
        other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
    };

    let mut payload = serde_json::Map::new();
    payload.insert("family".into(), family.into());
    if let Some(prefix) = out {
        let mut files = Vec::new();
        for (suffix, text) in &artifacts {
            let path = if suffix.is_empty() { prefix.to_string() } else { format!("{prefix}.{suffix}.txt") };
            fs::write(&path, text).map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?;
            files.push(Value::from(path));
        }
        payload.insert("files".into(), files.into());
    } else if json {
        for (suffix, text) in &artifacts {
            let key = if suffix.is_empty() { "graph" } else { suffix };
            payload.insert(key.into(), text.as_str().into());
        }
    } else {
        for (suffix, text) in &artifacts {
            if !suffix.is_empty() {
                println!("# {suffix}");
            }
            print!("{text}");
        }
        return Ok((None, EXIT_OK));
    }
    let input_digest = digest_args(&echo);
    Ok((Some(RunReport { command: echo, input_digest, payload: payload.into(), timing_ms: None }), EXIT_OK))
}
