use saca::{EvaluationReport, SacaConfig, ThresholdStats};
use serde::{Deserialize, Serialize};

/// Everything needed to audit or reproduce one clustering run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    /// Input path, or `preset:<name>` for generated data.
    pub input: String,
    pub algo: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<SacaConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_pts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<ThresholdStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outliers: Option<usize>,
    pub clusters: usize,
    pub wall_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<EvaluationReport>,
}

/// Side-by-side metric columns in the style of a benchmark table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchmarkRecord {
    pub input: String,
    pub saca: BenchmarkColumn,
    pub dbscan: BenchmarkColumn,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchmarkColumn {
    /// Parameter description, e.g. `C=3` or `eps=0.42 min_pts=5`.
    pub params: String,
    pub clusters: usize,
    pub metrics: EvaluationReport,
}

impl BenchmarkRecord {
    /// Plain-text rendering with aligned columns.
    pub fn table(&self) -> String {
        let rows: [(&str, fn(&EvaluationReport) -> Option<f64>); 6] = [
            ("silhouette", |m| Some(m.silhouette)),
            ("calinski_harabasz", |m| Some(m.calinski_harabasz)),
            ("davies_bouldin", |m| Some(m.davies_bouldin)),
            ("ari", |m| m.ari),
            ("ami", |m| m.ami),
            ("completeness", |m| m.completeness),
        ];
        let fmt = |v: Option<f64>| match v {
            Some(v) => format!("{v:.4}"),
            None => "-".to_owned(),
        };
        let mut out = String::new();
        out.push_str(&format!(
            "{:<18} {:>14} {:>14}\n",
            "metric", "SACA", "DBSCAN"
        ));
        out.push_str(&format!(
            "{:<18} {:>14} {:>14}\n",
            "params", self.saca.params, self.dbscan.params
        ));
        out.push_str(&format!(
            "{:<18} {:>14} {:>14}\n",
            "clusters", self.saca.clusters, self.dbscan.clusters
        ));
        for (name, get) in rows {
            out.push_str(&format!(
                "{:<18} {:>14} {:>14}\n",
                name,
                fmt(get(&self.saca.metrics)),
                fmt(get(&self.dbscan.metrics))
            ));
        }
        out
    }
}
