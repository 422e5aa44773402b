use anyhow::{anyhow, bail, Context, Result};
use ncp_core::coxeter::{BuildOptions, CoxeterDiagram, DEFAULT_GROUP_CAP};
use ncp_core::pipeline::PipelineOptions;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

/// Everything that determines the mathematical output of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Problem {
    pub kind: String,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u32>>>,
    pub swap_bipartition: bool,
    pub lambda_denominator: u32,
    pub group_cap: usize,
    pub simplex_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConfig {
    pub problem: Problem,
    pub out_dir: PathBuf,
    pub use_cache: bool,
}

impl Problem {
    pub fn new(kind: &str, rank: usize) -> Self {
        Problem {
            kind: kind.to_string(),
            rank,
            matrix: None,
            swap_bipartition: false,
            lambda_denominator: ncp_core::arrangement::DEFAULT_LAMBDA_DENOMINATOR,
            group_cap: DEFAULT_GROUP_CAP,
            simplex_budget: ncp_core::complexes::DEFAULT_SIMPLEX_BUDGET,
        }
    }

    pub fn diagram(&self) -> Result<CoxeterDiagram> {
        match &self.matrix {
            Some(m) => {
                if m.len() != self.rank {
                    bail!("Coxeter matrix has size {} but rank is {}", m.len(), self.rank);
                }
                let d = CoxeterDiagram::from_matrix(m.clone())?;
                Ok(d.with_label(format!("{}{}", self.kind, self.rank)))
            }
            None => Ok(CoxeterDiagram::from_type(&self.kind, self.rank)?),
        }
    }

    pub fn options(&self) -> PipelineOptions {
        PipelineOptions {
            build: BuildOptions {
                swap_bipartition: self.swap_bipartition,
                group_cap: self.group_cap,
            },
            lambda_denominator: self.lambda_denominator,
            simplex_budget: self.simplex_budget,
        }
    }

    /// Hex SHA-256 of the canonical JSON form, salted with `purpose`.
    pub fn content_hash(&self, purpose: &str) -> String {
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        h.update([0]);
        h.update(purpose.as_bytes());
        h.update([0]);
        h.update(serde_json::to_vec(self).expect("problem serializes"));
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Reads a diagram file: either `type=B rank=3` or `m = [[1,3,2],[3,1,4],[2,4,1]]`.
pub fn read_diagram_file(path: &Path) -> Result<DiagramSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_diagram_text(&text)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramSpec {
    Type { kind: String, rank: usize },
    Matrix(Vec<Vec<u32>>),
}

pub fn parse_diagram_text(text: &str) -> Result<DiagramSpec> {
    let text = text.trim();
    if let Some(start) = text.find('[') {
        let m: Vec<Vec<u32>> = serde_json::from_str(&text[start..]).context("parsing Coxeter matrix")?;
        return Ok(DiagramSpec::Matrix(m));
    }
    let mut kind = None;
    let mut rank = None;
    for token in text.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, found {token:?}"))?;
        match key {
            "type" => kind = Some(value.to_string()),
            "rank" => rank = Some(value.parse().context("parsing rank")?),
            other => bail!("unknown key {other:?}"),
        }
    }
    match (kind, rank) {
        (Some(kind), Some(rank)) => Ok(DiagramSpec::Type { kind, rank }),
        _ => bail!("diagram file needs both type= and rank="),
    }
}
