use std::io::Write;
use std::process::{Command, Stdio};

use serde::Serialize;

use super::{jones_polynomial_with, BracketOptions};
use crate::error::{MosaicError, Result};
use crate::mosaic::Mosaic;
use crate::pdcode::pd_code;
use crate::traversal::number_of_components;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnknotMethod {
    NoCrossings,
    JonesHeuristic,
    ExternalOracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnknotVerdict {
    pub result: bool,
    pub method: UnknotMethod,
}

/// External command that reads PD JSON on stdin and prints the total rank of knot Floer homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub program: String,
    pub args: Vec<String>,
}

impl Oracle {
    /// Split a command line on whitespace. No quoting is supported.
    pub fn from_command_line(line: &str) -> Result<Self> {
        let mut parts = line.split_whitespace().map(str::to_string);
        let program = parts.next().ok_or_else(|| MosaicError::OracleFailure("empty oracle command".into()))?;
        Ok(Oracle { program, args: parts.collect() })
    }

    /// Run the oracle on a PD JSON document and parse the reported rank.
    pub fn total_rank(&self, pd_json: &str) -> Result<u64> {
        let fail = |msg: String| MosaicError::OracleFailure(msg);
        let mut child = Command::new(&self.program)
            .args(&self.args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| fail(format!("cannot start {}: {e}", self.program)))?;
        child
            .stdin
            .take()
            .expect("piped stdin")
            .write_all(pd_json.as_bytes())
            .map_err(|e| fail(format!("writing PD code: {e}")))?;
        let out = child.wait_with_output().map_err(|e| fail(e.to_string()))?;
        if !out.status.success() {
            return Err(fail(format!(
                "{} exited with {}: {}",
                self.program,
                out.status,
                String::from_utf8_lossy(&out.stderr).trim()
            )));
        }
        let text = String::from_utf8_lossy(&out.stdout);
        text.trim().parse().map_err(|_| fail(format!("expected an integer rank, got {:?}", text.trim())))
    }
}

/// Decide whether a one-component mosaic is the unknot.
///
/// Without an oracle the answer is `jones == 1`, which is only a heuristic.
pub fn is_unknot(m: &Mosaic, oracle: Option<&Oracle>) -> Result<UnknotVerdict> {
    is_unknot_with(m, oracle, &BracketOptions::default())
}

pub fn is_unknot_with(m: &Mosaic, oracle: Option<&Oracle>, opts: &BracketOptions) -> Result<UnknotVerdict> {
    let components = number_of_components(m)?;
    if components != 1 {
        return Err(MosaicError::NotOneComponent(components));
    }
    if m.number_of_crossings() == 0 {
        return Ok(UnknotVerdict { result: true, method: UnknotMethod::NoCrossings });
    }
    match oracle {
        Some(o) => {
            let rank = o.total_rank(&pd_code(m)?.to_json())?;
            Ok(UnknotVerdict { result: rank == 1, method: UnknotMethod::ExternalOracle })
        }
        None => {
            Ok(UnknotVerdict { result: jones_polynomial_with(m, opts)?.is_one(), method: UnknotMethod::JonesHeuristic })
        }
    }
}
