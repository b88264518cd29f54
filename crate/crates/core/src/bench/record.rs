//! CSV rows emitted by `dpdp run`.

use std::io::Write;

use crate::error::{DpError, Result};

/// Column order of every benchmark CSV. Never reorder.
pub const HEADER: [&str; 10] = [
    "algo",
    "n",
    "m",
    "k_out",
    "rounds",
    "wasted_states",
    "threads",
    "seed",
    "cost_spec",
    "time_ms",
];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algo: String,
    pub n: usize,
    pub m: usize,
    pub k_out: usize,
    pub rounds: usize,
    pub wasted_states: usize,
    pub threads: usize,
    pub seed: u64,
    pub cost_spec: String,
    pub time_ms: f64,
}

impl BenchRecord {
    fn fields(&self) -> [String; 10] {
        [
            self.algo.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.k_out.to_string(),
            self.rounds.to_string(),
            self.wasted_states.to_string(),
            self.threads.to_string(),
            self.seed.to_string(),
            self.cost_spec.clone(),
            format!("{:.3}", self.time_ms),
        ]
    }
}

pub struct RecordWriter<W: Write> {
    inner: csv::Writer<W>,
}

fn csv_err(e: csv::Error) -> DpError {
    DpError::Format(format!("csv: {e}"))
}

impl<W: Write> RecordWriter<W> {
    /// Writes the header immediately.
    pub fn new(w: W) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(w);
        inner.write_record(HEADER).map_err(csv_err)?;
        Ok(RecordWriter { inner })
    }

    pub fn write(&mut self, r: &BenchRecord) -> Result<()> {
        self.inner.write_record(r.fields()).map_err(csv_err)?;
        self.inner.flush()?;
        Ok(())
    }

    pub fn into_inner(self) -> Result<W> {
        self.inner
            .into_inner()
            .map_err(|e| DpError::Io(e.into_error()))
    }
}
