//! End-to-end analysis of one input, with partial results when a stage stops.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::braiding::HeckeBraiding;
use crate::cy::{analyze_cy, superpotential_check, CyResult};
use crate::frobenius::{build_dual_tables, frobenius_form, modular_facts, nakayama_bruteforce, nakayama_formula_deg1};
use crate::frt::{action_matrices, h_linearity_check, homological_matrix, rtt_check, stability_check, HomologicalData};
use crate::input::{Convention, InputSpec};
use crate::linalg::Mat;
use crate::nichols::{
    as_regularity_check, build_quadratic, default_cap, graded_profile, hilbert_identity, koszul_check, Gldim,
};
use crate::scalar::Scalar;

/// Process exit classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Completed,
    Rejected,
    InternalError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Completed => 0,
            Status::Rejected => 2,
            Status::InternalError => 1,
        }
    }
}

/// How far to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Depth {
    Validate,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub stage: &'static str,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub name: String,
    pub dimension: usize,
    pub label_hint: Option<Scalar>,
    pub convention: Convention,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    pub invertible: bool,
    pub braid_equation: bool,
    pub label: Option<Scalar>,
    pub rigid: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Koszulity {
    pub exact: bool,
    pub internal_degrees_checked: String,
    pub hilbert_identity: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AsSummary {
    pub regular: bool,
    pub internal_degrees_checked: String,
    pub top_cohomology: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Structure {
    pub rtt_relations: bool,
    pub braiding_is_h_linear: bool,
    pub relations_stable: bool,
    pub koszul_components_stable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Oracle {
    pub form_nondegenerate: bool,
    pub nakayama_deg1_bruteforce: Mat,
    pub nakayama_deg1_formula: Mat,
    pub agreement: bool,
    pub phi_is_transpose: bool,
    pub modular_function_is_counit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub status: Status,
    pub input: InputEcho,
    pub cap: usize,
    pub stages_completed: Vec<&'static str>,
    pub failure: Option<Failure>,
    pub validation: Option<Validation>,
    pub relations_dim: Option<usize>,
    #[serde(rename = "dims_R")]
    pub dims_r: Option<Vec<usize>>,
    pub dims_dual: Option<Vec<usize>>,
    pub gldim: Option<Gldim>,
    pub koszul: Option<Koszulity>,
    pub as_regularity: Option<AsSummary>,
    pub structure: Option<Structure>,
    #[serde(rename = "Q")]
    pub quantum_label: Option<Scalar>,
    #[serde(rename = "D")]
    pub homological_matrix: Option<Mat>,
    pub phi: Option<Mat>,
    pub is_cy: Option<bool>,
    pub cy_scalar_condition: Option<bool>,
    pub superpotential_cy: Option<bool>,
    pub descriptor: Option<String>,
    pub twist: Option<Mat>,
    pub oracle: Option<Oracle>,
    pub caveats: Vec<String>,
}

impl AnalysisReport {
    fn new(spec: &InputSpec, sha256: String, cap: usize) -> Self {
        AnalysisReport {
            status: Status::Completed,
            input: InputEcho {
                name: spec.name.clone(),
                dimension: spec.dimension,
                label_hint: spec.label.clone(),
                convention: spec.options.convention,
                sha256,
            },
            cap,
            stages_completed: Vec::new(),
            failure: None,
            validation: None,
            relations_dim: None,
            dims_r: None,
            dims_dual: None,
            gldim: None,
            koszul: None,
            as_regularity: None,
            structure: None,
            quantum_label: None,
            homological_matrix: None,
            phi: None,
            is_cy: None,
            cy_scalar_condition: None,
            superpotential_cy: None,
            descriptor: None,
            twist: None,
            oracle: None,
            caveats: vec![
                "Noetherian: assumed, not checked".into(),
                format!("Koszulity and AS-regularity are checked up to tensor degree {cap}"),
            ],
        }
    }

    fn stop(mut self, status: Status, stage: &'static str, error: impl ToString) -> Self {
        self.status = status;
        self.failure = Some(Failure {
            stage,
            error: error.to_string(),
        });
        self
    }

    /// Canonical JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("json value") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<22}{v}");
        };
        line("input:", format!("{} (N = {})", self.input.name, self.input.dimension));
        line("sha256:", self.input.sha256.clone());
        line("convention:", format!("{:?}", self.input.convention).to_lowercase());
        line("cap:", self.cap.to_string());
        if let Some(v) = &self.validation {
            line("invertible:", v.invertible.to_string());
            line("braid equation:", v.braid_equation.to_string());
            if let Some(q) = &v.label {
                line("label q:", q.to_string());
            }
            if let Some(r) = v.rigid {
                line("rigid:", r.to_string());
            }
        }
        if let Some(d) = self.relations_dim {
            line("dim I:", d.to_string());
        }
        if let Some(d) = &self.dims_r {
            line("dims R:", format!("{d:?}"));
        }
        if let Some(d) = &self.dims_dual {
            line("dims R^!:", format!("{d:?}"));
        }
        if let Some(g) = self.gldim {
            line(
                "gldim:",
                match g {
                    Gldim::Finite(d) => d.to_string(),
                    Gldim::ExceedsCap => "exceeds cap".into(),
                },
            );
        }
        if let Some(k) = &self.koszul {
            line("koszul exact:", format!("{} (t in {})", k.exact, k.internal_degrees_checked));
            line("hilbert identity:", k.hilbert_identity.to_string());
        }
        if let Some(a) = &self.as_regularity {
            line("AS-regular:", format!("{} (t in {})", a.regular, a.internal_degrees_checked));
        }
        if let Some(s) = &self.structure {
            line("RTT relations:", s.rtt_relations.to_string());
            line("c is H-linear:", s.braiding_is_h_linear.to_string());
        }
        if let Some(q) = &self.quantum_label {
            line("Q:", q.to_string());
        }
        if let Some(d) = &self.homological_matrix {
            line("D:", render(d));
        }
        if let Some(p) = &self.phi {
            line("phi:", render(p));
        }
        if let Some(o) = &self.oracle {
            line("nakayama (deg 1):", render(&o.nakayama_deg1_bruteforce));
            line("oracle agreement:", o.agreement.to_string());
        }
        if let Some(d) = &self.descriptor {
            line("dualizing complex:", d.clone());
        }
        if let (Some(cy), Some(Gldim::Finite(d))) = (self.is_cy, self.gldim) {
            let _ = writeln!(out, "CALABI-YAU: {} (dimension {d})", if cy { "yes" } else { "no" });
        }
        if let Some(f) = &self.failure {
            let what = match self.status {
                Status::Rejected => "REJECTED",
                _ => "INTERNAL ERROR",
            };
            let _ = writeln!(out, "{what} at stage {}: {}", f.stage, f.error);
        }
        for c in &self.caveats {
            let _ = writeln!(out, "note: {c}");
        }
        out
    }
}

/// One-line `[[a, b], [c, d]]` form.
pub fn render(m: &Mat) -> String {
    let rows: Vec<String> = m.to_strings().into_iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Runs the pipeline on `spec`. `source` is hashed into the report; pass the
/// raw input bytes, or the emitted document for generated inputs.
pub fn analyze(spec: &InputSpec, source: &[u8], depth: Depth) -> AnalysisReport {
    let cap = spec.options.cap.unwrap_or_else(|| default_cap(spec.dimension));
    let mut rep = AnalysisReport::new(spec, sha256_hex(source), cap);
    let b = spec.braiding();

    // validate
    let invertible = b.is_invertible();
    let braid_equation = invertible && b.validate_braid_equation();
    rep.validation = Some(Validation {
        invertible,
        braid_equation,
        label: None,
        rigid: Some(b.rigidity_check()),
    });
    let hb = match HeckeBraiding::validate(b, spec.label.as_ref()) {
        Ok(hb) => hb,
        Err(e) => return rep.stop(Status::Rejected, "validate", e),
    };
    let q = hb.label().clone();
    if let Some(v) = rep.validation.as_mut() {
        v.label = Some(q.clone());
    }
    rep.stages_completed.push("validate");
    if depth == Depth::Validate {
        return rep;
    }

    // quadratic
    let qd = match build_quadratic(&hb) {
        Ok(qd) => qd,
        Err(e) => return rep.stop(Status::InternalError, "quadratic", e),
    };
    rep.relations_dim = Some(qd.relations.dim());
    rep.stages_completed.push("quadratic");

    // profile
    let gp = match graded_profile(&qd, cap) {
        Ok(gp) => gp,
        Err(e) => return rep.stop(Status::Rejected, "profile", e),
    };
    rep.dims_r = Some(gp.dims_r.clone());
    rep.dims_dual = Some(gp.dims_dual.clone());
    rep.gldim = Some(gp.gldim);
    let Gldim::Finite(d) = gp.gldim else {
        return rep.stop(
            Status::Rejected,
            "profile",
            format!("global dimension exceeds cap {cap}; CY analysis aborted"),
        );
    };
    rep.stages_completed.push("profile");

    // koszul / AS
    let kz = koszul_check(&qd, &gp);
    let hilbert = hilbert_identity(&gp);
    rep.koszul = Some(Koszulity {
        exact: kz.is_ok(),
        internal_degrees_checked: format!("0..={cap}"),
        hilbert_identity: hilbert,
    });
    if let Err(e) = kz {
        return rep.stop(Status::InternalError, "koszul", e);
    }
    if !hilbert {
        return rep.stop(Status::InternalError, "koszul", "Hilbert series identity fails");
    }
    rep.stages_completed.push("koszul");
    match as_regularity_check(&qd, &gp) {
        Ok(r) => {
            rep.as_regularity = Some(AsSummary {
                regular: true,
                internal_degrees_checked: format!("{}..={}", r.window.0, r.window.1),
                top_cohomology: format!("position {d}, internal degree {d}, dimension 1"),
            })
        }
        Err(e) => return rep.stop(Status::InternalError, "as_regularity", e),
    }
    rep.stages_completed.push("as_regularity");

    // FRT
    let bb = hb.braiding();
    let af = action_matrices(bb);
    let structure = Structure {
        rtt_relations: rtt_check(bb, &af),
        braiding_is_h_linear: h_linearity_check(bb, &af),
        relations_stable: stability_check(&af, &qd.relations, 2),
        koszul_components_stable: (1..=d).all(|m| stability_check(&af, &gp.k[m], m)),
    };
    let structure_ok = structure.rtt_relations
        && structure.braiding_is_h_linear
        && structure.relations_stable
        && structure.koszul_components_stable;
    rep.structure = Some(structure);
    if !structure_ok {
        return rep.stop(Status::InternalError, "frt", "generator action fails a structural check");
    }
    let hd: HomologicalData = match homological_matrix(&af, &gp.k[d], d, &q) {
        Ok(hd) => hd,
        Err(e) => return rep.stop(Status::InternalError, "frt", e),
    };
    rep.quantum_label = Some(hd.quantum_label.clone());
    rep.homological_matrix = Some(hd.matrix.clone());
    rep.stages_completed.push("frt");

    // phi and verdict
    let cy: CyResult = analyze_cy(bb, &hd, &q);
    rep.phi = Some(cy.phi.clone());
    rep.is_cy = Some(cy.is_cy);
    rep.cy_scalar_condition = Some(cy.scalar_condition);
    rep.superpotential_cy = Some(superpotential_check(&hd.spanning_vector, qd.dim, d));
    rep.descriptor = Some(cy.descriptor_text.clone());
    rep.twist = Some(cy.descriptor.twist.clone());
    rep.caveats.push(format!("twist exponent: eps^(d+1) = eps^{}", d + 1));
    rep.stages_completed.push("verdict");

    // oracle
    let oracle = build_dual_tables(&qd, &gp).and_then(|t| {
        let form = frobenius_form(&t)?;
        let eta = nakayama_bruteforce(&t, &form)?;
        Ok((eta, modular_facts(&t)))
    });
    let (eta, modular) = match oracle {
        Ok(x) => x,
        Err(e) => return rep.stop(Status::InternalError, "oracle", e),
    };
    let formula = nakayama_formula_deg1(bb, &hd, &q);
    let agreement = formula == *eta.degree_one();
    let phi_is_transpose = cy.phi == formula.transpose();
    rep.oracle = Some(Oracle {
        form_nondegenerate: true,
        nakayama_deg1_bruteforce: eta.degree_one().clone(),
        nakayama_deg1_formula: formula,
        agreement,
        phi_is_transpose,
        modular_function_is_counit: modular.alpha_is_counit(),
    });
    if !agreement {
        return rep.stop(
            Status::InternalError,
            "oracle",
            "closed Nakayama formula disagrees with the brute-force automorphism; the CY verdict is unreliable",
        );
    }
    if cy.is_cy != cy.scalar_condition || !phi_is_transpose || !modular.alpha_is_counit() {
        return rep.stop(Status::InternalError, "oracle", "verdict forms disagree");
    }
    rep.stages_completed.push("oracle");
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::{builtin, parse_input};

    fn run(spec: &InputSpec) -> AnalysisReport {
        analyze(spec, spec.to_json().as_bytes(), Depth::Full)
    }

    #[test]
    fn quantum_plane_text() {
        let spec = parse_input(r#"{"family":"diagonal","qmatrix":[[1,1],[1,1]]}"#).unwrap();
        let rep = run(&spec);
        assert_eq!(rep.status, Status::Completed);
        assert!(rep.to_text().contains("CALABI-YAU: yes (dimension 2)"));
    }

    #[test]
    fn quantum_plane_not_cy() {
        let spec = parse_input(r#"{"family":"diagonal","qmatrix":[[1,"2"],["1/2",1]]}"#).unwrap();
        let rep = run(&spec);
        assert_eq!(rep.status, Status::Completed);
        assert_eq!(rep.is_cy, Some(false));
        assert_eq!(rep.twist, Some(Mat::diag(&[Scalar::from_int(2), Scalar::ratio(1, 2)])));
        assert!(rep.to_text().contains("CALABI-YAU: no (dimension 2)"));
    }

    #[test]
    fn json_is_sorted_and_deterministic() {
        let spec = builtin("trivial1", None).unwrap();
        let a = run(&spec).to_json();
        assert_eq!(a, run(&spec).to_json());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["gldim"], 1);
        assert_eq!(v["Q"], "-1");
        assert_eq!(v["descriptor"], "R[1](-1)");
    }

    #[test]
    fn rejection_names_stage() {
        let spec = parse_input(r#"{"dimension":1,"braiding":[["0"]]}"#).unwrap();
        let rep = run(&spec);
        assert_eq!(rep.status.exit_code(), 2);
        assert_eq!(rep.failure.as_ref().unwrap().stage, "validate");
        assert!(rep.to_text().contains("REJECTED at stage validate"));
    }

    #[test]
    fn validate_depth_stops_early() {
        let spec = builtin("example2", None).unwrap();
        let rep = analyze(&spec, b"", Depth::Validate);
        assert_eq!(rep.stages_completed, vec!["validate"]);
        assert_eq!(rep.validation.unwrap().label, Some(Scalar::one()));
        assert!(rep.dims_dual.is_none());
    }
}
