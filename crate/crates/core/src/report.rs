//! JSON reports. Values that depend on wall-clock time live under a separate
//! top-level `runtime` key so everything else can be compared byte for byte.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bounds::BoundReport;
use crate::generators::ExtremalInstance;
use crate::graph::{Mode, Tiling};
use crate::regularity::{DominatingResult, RegularityWitness};
use crate::scalar::Scalar;
use crate::solver::SolveResult;
use crate::theory::{AuxReduction, ChromaticProfile, F2Classification, FivePartTiling};

#[derive(Debug, Clone, Serialize)]
pub struct BoundsJson {
    #[serde(rename = "thm3")]
    pub guaranteed: String,
    #[serde(rename = "remarkA")]
    pub construction: Option<String>,
    pub bft: String,
    pub gamma: String,
}

impl<S: Scalar> From<&BoundReport<S>> for BoundsJson {
    fn from(b: &BoundReport<S>) -> Self {
        BoundsJson {
            guaranteed: b.guaranteed_lower.to_string(),
            construction: b.construction_upper.as_ref().map(|x| x.to_string()),
            bft: b.bft_weak.to_string(),
            gamma: b.gamma.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub delta: usize,
    pub mode: Mode,
    pub solver: String,
    pub size: usize,
    pub exact: bool,
    pub nodes: u64,
    pub upper_bound_used: Option<usize>,
    pub tiling: Vec<(usize, usize, usize, String)>,
    pub bounds: BoundsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theory: Option<Value>,
}

impl SolveReport {
    pub fn from_exact<S: Scalar>(n: usize, delta: usize, mode: Mode, r: &SolveResult, bounds: &BoundReport<S>) -> Self {
        SolveReport {
            n,
            delta,
            mode,
            solver: "exact".into(),
            size: r.size(),
            exact: r.exact,
            nodes: r.nodes_expanded,
            upper_bound_used: Some(r.upper_bound_used),
            tiling: tiling_rows(&r.tiling),
            bounds: bounds.into(),
            certificate: None,
            regularity: None,
            theory: None,
        }
    }

    pub fn from_heuristic<S: Scalar>(n: usize, delta: usize, t: &Tiling, bounds: &BoundReport<S>) -> Self {
        SolveReport {
            n,
            delta,
            mode: t.mode,
            solver: "heuristic".into(),
            size: t.len(),
            exact: false,
            nodes: 0,
            upper_bound_used: None,
            tiling: tiling_rows(t),
            bounds: bounds.into(),
            certificate: None,
            regularity: None,
            theory: None,
        }
    }

    /// Pretty JSON with the runtime segregated under its own key.
    pub fn to_json(&self, runtime_ms: Option<u128>) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let (Some(ms), Value::Object(map)) = (runtime_ms, &mut v) {
            map.insert("runtime".into(), json!({ "ms": ms }));
        }
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

pub fn tiling_rows(t: &Tiling) -> Vec<(usize, usize, usize, String)> {
    t.triangles
        .iter()
        .map(|tr| {
            let [a, b, c] = tr.vertices;
            let color = tr.color.mono().map_or("m".to_string(), |c| c.symbol().to_string());
            (a, b, c, color)
        })
        .collect()
}

pub fn certificate_json(inst: &ExtremalInstance) -> Value {
    json!({
        "ell": inst.ell,
        "part_sizes": inst.parts.iter().map(Vec::len).collect::<Vec<_>>(),
        "part_alpha": inst.part_alpha,
        "delta_actual": inst.delta_actual,
        "bounds": inst.certificates.iter().map(|c| json!({ "kind": c.kind, "bound": c.bound, "parts": c.parts_used })).collect::<Vec<_>>(),
        "best": inst.best_bound(),
    })
}

pub fn witness_json<S: Scalar>(w: &RegularityWitness<S>) -> Value {
    json!({ "x": w.x.to_vec(), "y": w.y.to_vec(), "deviation": w.deviation.to_string() })
}

pub fn dominating_json(d: &DominatingResult) -> Value {
    json!({
        "picks": d.picks,
        "covered": d.covered.len(),
        "t_target": d.t_target,
        "irregular_steps": d.irregular_steps,
        "uncovered_sizes": d.uncovered_sizes,
        "reached": d.reached,
    })
}

pub fn chromatic_json<S: Scalar>(p: &ChromaticProfile<S>) -> Value {
    json!({
        "order": p.order,
        "chi": p.chi,
        "sigma": p.sigma,
        "chi_cr": p.chi_cr.to_string(),
        "hcf_chi": p.hcf_chi.to_string(),
        "hcf_c": p.hcf_c.to_string(),
        "hcf": p.hcf.to_string(),
        "chi_star": p.chi_star.to_string(),
    })
}

pub fn reduction_json<S: Scalar>(r: &AuxReduction<S>, c_f2: &S, classification: Option<&F2Classification<S>>) -> Value {
    let mut m = Map::new();
    m.insert("k".into(), json!(r.k));
    m.insert("delta".into(), json!(r.delta));
    m.insert("C".into(), json!(r.c.to_string()));
    m.insert("C_F2".into(), json!(c_f2.to_string()));
    m.insert("w".into(), json!(r.w_size()));
    m.insert("order".into(), json!(r.order()));
    m.insert("aux_min_degree".into(), json!(r.aux_min_degree));
    m.insert("degree_hypothesis".into(), json!(r.degree_hypothesis_holds(c_f2)));
    if let Some(c) = classification {
        m.insert(
            "counts".into(),
            json!({ "s": c.s, "t": c.t, "l": c.l, "l_minus_s": c.l_minus_s.to_string(), "l_lower": c.l_lower.to_string() }),
        );
    }
    Value::Object(m)
}

pub fn five_part_json(t: &FivePartTiling) -> Value {
    json!({
        "size": t.tiling.len(),
        "first_phase": t.first_phase,
        "second_phase": t.second_phase,
        "target_reached": t.target_reached,
    })
}
