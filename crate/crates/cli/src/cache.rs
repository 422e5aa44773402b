//! Content-addressed store under `<out>/.ncph-cache/<hash>/`.

use crate::config::Problem;
use crate::export::Encoder;
use anyhow::{Context, Result};
use ncp_core::ExactPipeline;
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(out_dir: &Path, problem: &Problem) -> Self {
        Cache {
            dir: out_dir.join(".ncph-cache").join(problem.content_hash("system")),
        }
    }

    pub fn get(&self, name: &str) -> Option<String> {
        fs::read_to_string(self.dir.join(name)).ok()
    }

    pub fn put(&self, name: &str, contents: &str) -> Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let tmp = self.dir.join(format!(".{name}.tmp"));
        fs::write(&tmp, contents)?;
        fs::rename(&tmp, self.dir.join(name))?;
        Ok(())
    }

    /// Stores the group elements and the ρ-order once per problem.
    pub fn store_system(&self, problem: &Problem, p: &ExactPipeline) -> Result<()> {
        if self.dir.join("system.json").exists() {
            return Ok(());
        }
        let enc = Encoder::new(&p.system);
        let g = p.system.group();
        let elements: Vec<_> = g
            .ids()
            .map(|w| json!({"length": g.length(w), "matrix": enc.matrix(g.matrix(w))}))
            .collect();
        let roots: Vec<_> = p.ordered.roots().iter().map(|r| enc.vector(r)).collect();
        let doc = json!({
            "header": crate::export::header(problem, &p.system),
            "coxeterElement": p.system.coxeter_element().0,
            "coxeterNumber": p.system.coxeter_number(),
            "elements": elements,
            "roots": roots,
            "tau": p.ordered.tau_positions(),
        });
        self.put("system.json", &crate::export::to_text(&doc))
    }
}
