//! The `.ftc` text format.
//!
//! ```text
//! # Bell pair
//! qubits 2
//! H 0
//! CX 0 1
//! ```
//!
//! One timestep per line, ops separated by `;`, `#` to end of line is a
//! comment. Qubits not mentioned on a line wait.

use super::{LogicalCircuit, LogicalOp, OpKind};
use crate::error::{AceError, Result};

fn parse_index(token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| AceError::Syntax(format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| AceError::Syntax(format!("`{token}` is not a qubit index")))
}

fn parse_op(text: &str) -> Result<LogicalOp> {
    let mut tokens = text.split_whitespace();
    let name = tokens
        .next()
        .ok_or_else(|| AceError::Syntax("empty operation".into()))?;
    let kind = match name.to_ascii_uppercase().as_str() {
        "WAIT" => OpKind::Wait,
        "H" => OpKind::H,
        "S" => OpKind::S,
        "T" => OpKind::T,
        "CX" | "CNOT" => OpKind::Cnot,
        "XEC" => OpKind::Xec,
        "ZEC" => OpKind::Zec,
        _ => return Err(AceError::Syntax(format!("unknown operation `{name}`"))),
    };
    let op = if kind == OpKind::Cnot {
        let control = parse_index(tokens.next(), "control qubit")?;
        let target = parse_index(tokens.next(), "target qubit")?;
        LogicalOp::Cnot { control, target }
    } else {
        LogicalOp::single(kind, parse_index(tokens.next(), "qubit")?)
    };
    if let Some(extra) = tokens.next() {
        return Err(AceError::Syntax(format!("unexpected token `{extra}`")));
    }
    Ok(op)
}

pub fn parse_circuit(text: &str) -> Result<LogicalCircuit> {
    let mut n_qubits = None;
    let mut steps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match n_qubits {
            None => {
                let mut tokens = line.split_whitespace();
                if tokens.next() != Some("qubits") {
                    return Err(
                        AceError::Syntax("expected `qubits K` header".into()).at_line(line_no)
                    );
                }
                let k =
                    parse_index(tokens.next(), "qubit count").map_err(|e| e.at_line(line_no))?;
                if tokens.next().is_some() {
                    return Err(AceError::Syntax("trailing tokens after qubit count".into())
                        .at_line(line_no));
                }
                n_qubits = Some(k);
            }
            Some(k) => {
                let ops = line
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(parse_op)
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| e.at_line(line_no))?;
                // validate the line alone so range errors carry its number
                LogicalCircuit::new(k, vec![ops.clone()]).map_err(|e| match e {
                    AceError::DuplicateQubit { qubit, .. } => AceError::DuplicateQubit {
                        step: steps.len(),
                        qubit,
                    }
                    .at_line(line_no),
                    other => other.at_line(line_no),
                })?;
                steps.push(ops);
            }
        }
    }
    let n_qubits = n_qubits.ok_or_else(|| AceError::Syntax("missing `qubits K` header".into()))?;
    LogicalCircuit::new(n_qubits, steps)
}

/// Canonical text: explicit non-wait ops in anchor order joined by `"; "`; a
/// step with nothing but waits lists every wait.
pub fn serialize_circuit(circuit: &LogicalCircuit) -> String {
    let mut out = format!("qubits {}\n", circuit.n_qubits());
    for ops in circuit.steps() {
        let busy: Vec<String> = ops
            .iter()
            .filter(|op| op.kind() != OpKind::Wait)
            .map(ToString::to_string)
            .collect();
        let line = if busy.is_empty() {
            ops.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        } else {
            busy.join("; ")
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
