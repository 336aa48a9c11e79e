//! Graph selector grammar: one flat string keys every analysis.
//!
//! ```text
//! uc:N                   unitary Cayley graph on Z_N
//! cycle:N                cycle C_N
//! complete:N             complete graph K_N
//! circulant:N:s1,s2,...  circulant on Z_N (the set is closed under s -> N-s
//!                        automatically)
//! named:hamming:S:T      Hamming graph H(S, T)
//! named:kbip:M           complete bipartite K_{M,M}
//! named:ktri:M           complete tripartite K_{M,M,M}
//! file:PATH              edge list file ("n m" header, then "u v" lines)
//! ```

use grover_walk::graphs::{self, CirculantSpec, Graph};

/// A parsed selector: the graph plus, for circulant selectors, the
/// circulant structure (which unlocks exact spectra and the PST
/// criterion diagnostics).
pub struct Target {
    pub graph: Graph,
    pub circulant: Option<CirculantSpec>,
    /// Set when the selector is `uc:N` (exact integer spectra apply).
    pub unitary_cayley_order: Option<usize>,
}

/// Selector failures split by exit-code class.
#[derive(Debug)]
pub enum SelectorError {
    /// The string does not follow the grammar: usage error (exit 1).
    Usage(String),
    /// The grammar is fine but the graph is invalid: the library's
    /// validation/domain error (exit 2).
    Build(grover_walk::Error),
}

impl From<grover_walk::Error> for SelectorError {
    fn from(e: grover_walk::Error) -> Self {
        SelectorError::Build(e)
    }
}

fn usage(msg: impl Into<String>) -> SelectorError {
    SelectorError::Usage(msg.into())
}

fn parse_number(token: &str, what: &str) -> Result<usize, SelectorError> {
    token
        .parse::<usize>()
        .map_err(|_| usage(format!("{what} must be a non-negative integer, got '{token}'")))
}

/// Parses a selector string and builds the graph.
pub fn parse(selector: &str) -> Result<Target, SelectorError> {
    let (kind, rest) = selector
        .split_once(':')
        .ok_or_else(|| usage(format!("selector '{selector}' must look like kind:args")))?;
    let target = |graph: Graph, circulant: Option<CirculantSpec>, uc: Option<usize>| Target {
        graph,
        circulant,
        unitary_cayley_order: uc,
    };
    match kind {
        "uc" => {
            let n = parse_number(rest, "uc order")?;
            let graph = graphs::unitary_cayley(n)?;
            let units = (1..n).filter(|&r| grover_walk::numtheory::gcd(r as u64, n as u64) == 1);
            let spec = CirculantSpec::new(n, units)?;
            Ok(target(graph, Some(spec), Some(n)))
        }
        "cycle" => {
            let n = parse_number(rest, "cycle order")?;
            let graph = graphs::cycle(n)?;
            let spec = CirculantSpec::new(n, [1, n - 1])?;
            Ok(target(graph, Some(spec), None))
        }
        "complete" => {
            let n = parse_number(rest, "complete-graph order")?;
            let graph = graphs::complete(n)?;
            let spec = CirculantSpec::new(n, 1..n)?;
            Ok(target(graph, Some(spec), None))
        }
        "circulant" => {
            let (n_token, set_token) = rest
                .split_once(':')
                .ok_or_else(|| usage("circulant selector needs circulant:N:s1,s2,..."))?;
            let n = parse_number(n_token, "circulant order")?;
            let mut connection = Vec::new();
            for token in set_token.split(',') {
                let s = parse_number(token.trim(), "connection residue")?;
                if s == 0 || s >= n {
                    return Err(SelectorError::Build(grover_walk::Error::Validation(
                        format!("connection residue {s} outside 1..{n}"),
                    )));
                }
                connection.push(s);
                connection.push(n - s);
            }
            let spec = CirculantSpec::new(n, connection)?;
            let graph = graphs::cayley(&spec)?;
            Ok(target(graph, Some(spec), None))
        }
        "named" => {
            let mut parts = rest.split(':');
            let name = parts.next().unwrap_or("");
            let args: Vec<&str> = parts.collect();
            match (name, args.as_slice()) {
                ("hamming", [s, t]) => {
                    let graph =
                        graphs::hamming(parse_number(s, "word length")?, parse_number(t, "alphabet size")?)?;
                    Ok(target(graph, None, None))
                }
                ("kbip", [m]) => {
                    let m = parse_number(m, "part size")?;
                    Ok(target(graphs::complete_bipartite(m, m)?, None, None))
                }
                ("ktri", [m]) => {
                    let m = parse_number(m, "part size")?;
                    Ok(target(graphs::complete_tripartite(m, m, m)?, None, None))
                }
                _ => Err(usage(format!(
                    "unknown named graph '{rest}' (expected hamming:S:T, kbip:M or ktri:M)"
                ))),
            }
        }
        "file" => {
            if rest.is_empty() {
                return Err(usage("file selector needs a path: file:PATH"));
            }
            let graph = Graph::from_edge_list_file(rest)?;
            Ok(target(graph, None, None))
        }
        other => Err(usage(format!(
            "unknown selector kind '{other}' (expected uc, cycle, complete, circulant, named or file)"
        ))),
    }
}
