//! Deterministic JSON report envelopes. Reports carry a schema version and a
//! provenance block (tool and data versions, never timestamps), and are
//! rendered with sorted keys so identical runs emit identical bytes.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub ledger_version: u32,
}

impl Provenance {
    pub fn current() -> Self {
        Provenance {
            tool: "vsl",
            version: env!("CARGO_PKG_VERSION"),
            ledger_version: crate::pipeline::ledger_version(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: u32,
    pub command: String,
    pub result: T,
    pub provenance: Provenance,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, result: T) -> Self {
        Envelope {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            result,
            provenance: Provenance::current(),
        }
    }
}

/// Serializes with all object keys sorted (serde_json's map is ordered), so
/// equal inputs produce byte-identical output.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("value renders");
    s.push('\n');
    s
}
