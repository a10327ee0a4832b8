//! Plain-text instance files.
//!
//! ```text
//! c comment lines start with `c`
//! p pawmod <n> <m> <k> <completion|deletion>
//! e <u> <v>        (m lines, 1-based ids)
//! ```

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{edge, Graph};
use crate::instance::{Instance, Problem};

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, what: &str, token: Option<&str>) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| err(line, format!("invalid {what} `{token}`")))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize, i64, Problem)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else {
            continue;
        };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, "second header line"));
                }
                if tokens.next() != Some("pawmod") {
                    return Err(err(line, "expected `p pawmod <n> <m> <k> <problem>`"));
                }
                let n = number(line, "vertex count", tokens.next())?;
                let m = number(line, "edge count", tokens.next())?;
                let k = number(line, "budget", tokens.next())?;
                let problem = tokens
                    .next()
                    .ok_or_else(|| err(line, "missing problem"))?
                    .parse()
                    .map_err(|e: String| err(line, e))?;
                header = Some((n, m, k, problem));
            }
            "e" => {
                let Some((n, m, _, _)) = header else {
                    return Err(err(line, "edge before header"));
                };
                let u: usize = number(line, "vertex", tokens.next())?;
                let v: usize = number(line, "vertex", tokens.next())?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(line, format!("loop at vertex {u}")));
                }
                if !seen.insert(edge(u - 1, v - 1)) {
                    return Err(err(line, format!("duplicate edge {u} {v}")));
                }
                if edges.len() == m {
                    return Err(err(line, format!("more than {m} edge lines")));
                }
                edges.push(edge(u - 1, v - 1));
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
        if tokens.next().is_some() {
            return Err(err(line, "trailing tokens"));
        }
    }
    let (n, m, k, problem) = header.ok_or_else(|| err(last_line.max(1), "missing header"))?;
    if edges.len() != m {
        return Err(err(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Instance::new(Graph::from_edges(n, edges), k, problem))
}

/// Canonical text: header, then edges in ascending order.
pub fn write_instance(instance: &Instance) -> String {
    let g = &instance.graph;
    let mut out = format!("p pawmod {} {} {} {}\n", g.n(), g.m(), instance.k, instance.problem);
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::fixtures::paw;

    const PAW: &str = "p pawmod 4 4 1 deletion\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n";

    #[test]
    fn parses_paw() {
        let inst = parse_instance(PAW).unwrap();
        assert_eq!(inst, Instance::new(paw(), 1, Problem::Deletion));
        assert_eq!(write_instance(&inst), PAW);
    }

    #[test]
    fn comments_and_order() {
        let text = "c hi\n\np pawmod 4 4 1 deletion\nc mid\ne 4 3\ne 2 3\ne 1 3\ne 2 1\n";
        assert_eq!(write_instance(&parse_instance(text).unwrap()), PAW);
    }

    #[test]
    fn empty_instance() {
        let inst = Instance::new(Graph::new(0), 3, Problem::Completion);
        assert_eq!(write_instance(&inst), "p pawmod 0 0 3 completion\n");
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("p pawmod 4 1 1 deletion\ne 0 1\n", 2),
            ("p pawmod 4 2 1 deletion\ne 1 2\ne 2 1\n", 3),
            ("p pawmod 4 1 1 deletion\ne 2 2\n", 2),
            ("p pawmod 4 2 1 deletion\ne 1 2\n", 2),
            ("p pawmod 4 1 1 deletion\ne 1 2\ne 1 3\n", 3),
            ("c only\np pawmod 4 x 1 deletion\n", 2),
            ("p pawmod 4 0 1 editing\n", 1),
            ("e 1 2\n", 1),
            ("", 1),
            ("p pawmod 4 1 1 deletion\nx 1 2\n", 2),
            ("p pawmod 4 1 1 deletion\ne 1 2 3\n", 2),
        ];
        for (text, line) in cases {
            assert_eq!(parse_instance(text).unwrap_err().line, line, "{text:?}");
        }
    }

    #[test]
    fn negative_budget_round_trips() {
        let text = "p pawmod 2 1 -1 completion\ne 1 2\n";
        assert_eq!(write_instance(&parse_instance(text).unwrap()), text);
    }
}
