use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Computes a summary from parameters and raw rows.
pub trait Summarize {
    type Params;
    type Replica;
    type Summary;
    fn summarize(params: &Self::Params, replicas: &[Self::Replica]) -> Self::Summary;
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord<P, R, S> {
    pub schema_version: u32,
    pub experiment: String,
    pub parameters: P,
    pub replicas: Vec<R>,
    pub summary: S,
}

#[derive(Serialize)]
struct SummaryView<'a, P, S> {
    schema_version: u32,
    experiment: &'a str,
    parameters: &'a P,
    replica_count: usize,
    summary: &'a S,
}

impl<P: Serialize, R: Serialize, S: Serialize> ExperimentRecord<P, R, S> {
    pub fn new(experiment: &str, parameters: P, replicas: Vec<R>, summary: S) -> Self {
        ExperimentRecord {
            schema_version: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            parameters,
            replicas,
            summary,
        }
    }

    /// One CSV row per replica, preceded by a `# schema_version=... experiment=...` line.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.replicas {
            w.serialize(r)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        let body = String::from_utf8(bytes).expect("csv output is utf-8");
        Ok(format!(
            "# schema_version={} experiment={}\n{body}",
            self.schema_version, self.experiment
        ))
    }

    pub fn summary_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&SummaryView {
            schema_version: self.schema_version,
            experiment: &self.experiment,
            parameters: &self.parameters,
            replica_count: self.replicas.len(),
            summary: &self.summary,
        })?)
    }
}
