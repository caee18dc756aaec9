//! JSON-lines trace format for grow-then-prune runs, and trace replay.
//!
//! One object per line:
//! `{"kind":"grow","element":NAME,"components":N}` for grow steps and
//! `{"kind":"prune","element":NAME,"connected":BOOL,"removed":BOOL}` for
//! prune steps.

use cayley::genset::{
    minimal_generating_set, GrowPruneTrace, MinGenResult, SelectionPolicy, TraceStep,
};
use cayley::{Error, FiniteGroup, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TraceRecord {
    Grow {
        element: String,
        components: usize,
    },
    Prune {
        element: String,
        connected: bool,
        removed: bool,
    },
}

pub fn records_from(group: &FiniteGroup, trace: &GrowPruneTrace) -> Vec<TraceRecord> {
    trace
        .steps
        .iter()
        .map(|step| match *step {
            TraceStep::Grow {
                added, components, ..
            } => TraceRecord::Grow {
                element: group.name(added).to_string(),
                components,
            },
            TraceStep::Prune {
                tested,
                connected,
                removed,
            } => TraceRecord::Prune {
                element: group.name(tested).to_string(),
                connected,
                removed,
            },
        })
        .collect()
}

pub fn to_jsonl(records: &[TraceRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("trace records serialize"));
        out.push('\n');
    }
    out
}

pub fn parse_jsonl(text: &str) -> Result<Vec<TraceRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse {
                line: i + 1,
                message: format!("bad trace record: {e}"),
            })
        })
        .collect()
}

/// Re-runs the algorithm with the choices recorded in a trace and checks
/// the replayed trace matches record for record. Returns the replayed
/// result on success.
///
/// The grow records carry the added connectors a_i = v1^-1 v2, so the
/// original picks are recovered as v2 = v1 * a_i.
pub fn replay(group: &FiniteGroup, records: &[TraceRecord]) -> Result<MinGenResult> {
    let first = records
        .first()
        .ok_or_else(|| Error::Domain("empty trace".into()))?;
    let start_name = match first {
        TraceRecord::Grow { element, .. } => element,
        TraceRecord::Prune { .. } => {
            return Err(Error::Domain("trace must begin with a grow step".into()))
        }
    };
    let start = group
        .by_name(start_name)
        .ok_or_else(|| Error::Domain(format!("no element named '{start_name}' in this group")))?;
    let mut picks = Vec::new();
    for record in &records[1..] {
        if let TraceRecord::Grow { element, .. } = record {
            let added = group.by_name(element).ok_or_else(|| {
                Error::Domain(format!("no element named '{element}' in this group"))
            })?;
            picks.push(group.mul(start, added));
        }
    }
    let result = minimal_generating_set(group, start, SelectionPolicy::Scripted(picks))?;
    let replayed = records_from(group, &result.trace);
    if replayed.len() != records.len() {
        return Err(Error::Domain(format!(
            "trace mismatch: {} recorded steps, {} replayed",
            records.len(),
            replayed.len()
        )));
    }
    for (i, (rec, rep)) in records.iter().zip(&replayed).enumerate() {
        if rec != rep {
            return Err(Error::Domain(format!(
                "trace mismatch at step {}: recorded {}, replayed {}",
                i + 1,
                serde_json::to_string(rec).unwrap(),
                serde_json::to_string(rep).unwrap()
            )));
        }
    }
    Ok(result)
}
