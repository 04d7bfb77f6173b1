use serde::{Deserialize, Serialize};

/// Wall time per pipeline phase, in seconds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseSeconds {
    pub label_propagation: f64,
    pub correcting: f64,
    pub contraction: f64,
    pub padberg_rinaldi: f64,
    pub final_solve: f64,
}

/// One solver invocation. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub algorithm: String,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub threads: usize,
    pub repetition: usize,
    pub cut: u64,
    pub time_s: f64,
    pub phases: PhaseSeconds,
    /// Size of side A when the partition was written out.
    pub partition_side_a: Option<usize>,
}

/// One JSON object per line, each terminated by a newline.
pub fn emit_results(records: &[ResultRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records always serialize"));
        out.push('\n');
    }
    out
}
