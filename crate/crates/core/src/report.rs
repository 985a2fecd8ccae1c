//! Text and JSON renderings of a tensor product with its involutions and
//! quotients. The JSON field set is the stable machine interface.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::involution::GoodInvolution;
use crate::tensor::{quotient, rho_map, tau_map, ClassId, ClassInvolution, InvolutionKind, TensorProduct};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorReport {
    pub n: usize,
    pub classes: Vec<Vec<[usize; 2]>>,
    pub reps: Vec<[usize; 2]>,
    pub tau: Vec<ClassId>,
    pub rho: Option<Vec<ClassId>>,
    pub quotients: BTreeMap<String, Vec<Vec<ClassId>>>,
    pub counts: BTreeMap<String, usize>,
}

/// Which quotients to include, by generator set.
pub fn parse_quotient_selector(s: &str) -> Option<Vec<InvolutionKind>> {
    match s {
        "tau" => Some(vec![InvolutionKind::Tau]),
        "rho" => Some(vec![InvolutionKind::Rho]),
        "tau,rho" | "rho,tau" => Some(vec![InvolutionKind::Tau, InvolutionKind::Rho]),
        _ => None,
    }
}

/// Builds the report. Quotients involving rho need `rho`; the caller is
/// expected to have checked that.
pub fn tensor_report(
    t: &TensorProduct,
    rho: Option<&GoodInvolution>,
    quotients: &[Vec<InvolutionKind>],
) -> Result<TensorReport> {
    let tau = tau_map(t);
    let rho = rho.map(|r| rho_map(t, r)).transpose()?;
    let mut counts = BTreeMap::new();
    counts.insert("classes".to_string(), t.len());
    let mut qs = BTreeMap::new();
    for gens in quotients {
        let invs: Vec<&ClassInvolution> = gens
            .iter()
            .filter_map(|k| match k {
                InvolutionKind::Tau => Some(&tau),
                InvolutionKind::Rho => rho.as_ref(),
            })
            .collect();
        let q = quotient(t, &invs);
        counts.insert(q.name(), q.len());
        qs.insert(q.name(), q.blocks().to_vec());
    }
    Ok(TensorReport {
        n: t.n(),
        classes: t
            .classes()
            .iter()
            .map(|c| c.iter().map(|&(a, b)| [a, b]).collect())
            .collect(),
        reps: t.reps().iter().map(|&(a, b)| [a, b]).collect(),
        tau: tau.map().to_vec(),
        rho: rho.map(|r| r.map().to_vec()),
        quotients: qs,
        counts,
    })
}

impl TensorReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable listing; `labels` names each class.
    pub fn to_text(&self, labels: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n = {}, {} classes", self.n, self.classes.len());
        for (id, class) in self.classes.iter().enumerate() {
            let pairs: Vec<String> = class.iter().map(|[a, b]| format!("({a},{b})")).collect();
            let _ = writeln!(out, "  [{id}] {} = {{{}}}", labels[id], pairs.join(", "));
        }
        let perm = |v: &[ClassId]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "tau: {}", perm(&self.tau));
        if let Some(rho) = &self.rho {
            let _ = writeln!(out, "rho: {}", perm(rho));
        }
        for (name, blocks) in &self.quotients {
            let _ = writeln!(out, "quotient by <{name}>: {} blocks", blocks.len());
            for block in blocks {
                let names: Vec<&str> = block.iter().map(|&c| labels[c].as_str()).collect();
                let _ = writeln!(out, "  {{{}}}", names.join(", "));
            }
        }
        out
    }
}
