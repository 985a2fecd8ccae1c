//! Cardinalities and labeled inventories of 1-handle classes.
//!
//! Strong equivalence classes of oriented 1-handles correspond to
//! `Q ⊗ Q` and weak ones to `Q ⊗ Q / <tau>`, where `Q` is the knot quandle;
//! for unoriented handles the full knot symmetric quandle `(Q~, rho)` takes
//! its place, with `Q~ ⊗ Q~` and `Q~ ⊗ Q~ / <tau, rho>`.

use serde::Serialize;

use crate::error::Result;
use crate::involution::{validate_good_involution, GoodInvolution};
use crate::quandle::Quandle;
use crate::tensor::{quotient, rho_map, tau_map, tensor_product, QuotientSet, TensorProduct};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HandleCount {
    pub count: usize,
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HandleReport {
    pub strong_oriented: Option<HandleCount>,
    pub weak_oriented: Option<HandleCount>,
    pub strong_all: Option<HandleCount>,
    pub weak_all: Option<HandleCount>,
}

fn strong(t: &TensorProduct, labels: &[String]) -> HandleCount {
    HandleCount {
        count: t.len(),
        classes: labels.to_vec(),
    }
}

fn weak(q: &QuotientSet, labels: &[String]) -> HandleCount {
    HandleCount {
        count: q.len(),
        classes: q
            .blocks()
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|&c| labels[c].as_str()).collect();
                format!("{{{}}}", names.join(", "))
            })
            .collect(),
    }
}

/// Without `rho`, `q` plays the knot quandle and only the oriented counts
/// are filled. With `rho`, `(q, rho)` plays the knot symmetric quandle and
/// only the counts for all 1-handles are filled.
pub fn handle_report(q: &Quandle, rho: Option<&GoodInvolution>) -> Result<HandleReport> {
    let t = tensor_product(q);
    let labels = t.labels();
    let tau = tau_map(&t);
    match rho {
        None => Ok(HandleReport {
            strong_oriented: Some(strong(&t, &labels)),
            weak_oriented: Some(weak(&quotient(&t, &[&tau]), &labels)),
            ..HandleReport::default()
        }),
        Some(rho) => {
            let rho = validate_good_involution(q, rho.map())?;
            let rho = rho_map(&t, &rho)?;
            Ok(HandleReport {
                strong_all: Some(strong(&t, &labels)),
                weak_all: Some(weak(&quotient(&t, &[&tau, &rho]), &labels)),
                ..HandleReport::default()
            })
        }
    }
}

impl HandleReport {
    /// Fills the fields missing from `self` with those of `other`.
    pub fn merge(self, other: HandleReport) -> HandleReport {
        HandleReport {
            strong_oriented: self.strong_oriented.or(other.strong_oriented),
            weak_oriented: self.weak_oriented.or(other.weak_oriented),
            strong_all: self.strong_all.or(other.strong_all),
            weak_all: self.weak_all.or(other.weak_all),
        }
    }

    pub fn counts(&self) -> [Option<usize>; 4] {
        [
            self.strong_oriented.as_ref().map(|c| c.count),
            self.weak_oriented.as_ref().map(|c| c.count),
            self.strong_all.as_ref().map(|c| c.count),
            self.weak_all.as_ref().map(|c| c.count),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let rows = [
            ("strong, oriented", &self.strong_oriented),
            ("weak, oriented", &self.weak_oriented),
            ("strong, all", &self.strong_all),
            ("weak, all", &self.weak_all),
        ];
        for (name, entry) in rows {
            if let Some(c) = entry {
                out.push_str(&format!("{name}: {}\n", c.count));
                for class in &c.classes {
                    out.push_str(&format!("  {class}\n"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::{identity_involution, symmetric_double};
    use crate::quandle::{make_dihedral, make_trivial};

    #[test]
    fn twist_spun_torus_knot_counts() {
        let r5 = make_dihedral(5).unwrap();
        let (d, rho) = symmetric_double(&r5);
        let report = handle_report(&r5, None)
            .unwrap()
            .merge(handle_report(&d, Some(&rho)).unwrap());
        assert_eq!(report.counts(), [Some(3), Some(3), Some(12), Some(6)]);
        let strong_all = report.strong_all.as_ref().unwrap();
        assert!(strong_all.classes.contains(&"E(2)^{+,-}".to_string()));
    }

    #[test]
    fn projective_plane_counts() {
        let r5 = make_dihedral(5).unwrap();
        let id = identity_involution(&r5).unwrap();
        let report = handle_report(&r5, Some(&id)).unwrap();
        assert_eq!(report.counts(), [None, None, Some(3), Some(3)]);
    }

    #[test]
    fn single_point() {
        let t1 = make_trivial(1).unwrap();
        let id = identity_involution(&t1).unwrap();
        let report = handle_report(&t1, None)
            .unwrap()
            .merge(handle_report(&t1, Some(&id)).unwrap());
        assert_eq!(report.counts(), [Some(1); 4]);
    }

    #[test]
    fn foreign_involution_rejected() {
        let r3 = make_dihedral(3).unwrap();
        let r4 = make_dihedral(4).unwrap();
        let shift = crate::involution::validate_good_involution(&r4, &[2, 3, 0, 1]).unwrap();
        assert!(handle_report(&r3, Some(&shift)).is_err());
    }
}
