//! WebAssembly front end for the `rainbowj` library.
//!
//! Each exported function takes plain numbers and returns a JSON string
//! describing a drawing: vertex positions on a unit canvas, edges, the colour
//! (or binary label) of every vertex and a few lines of summary text. The
//! page in `www/` renders that JSON as SVG. The `*_view` functions behind the
//! exports are ordinary Rust and are tested natively.

use rainbowj::coloring::rainbow_report;
use rainbowj::cordial::{cordial_family_member, find_cordial_labeling, labeling_stats};
use rainbowj::family::FamilyInstance;
use rainbowj::generators::{self, JahangirLayout};
use rainbowj::jcolor::{decide_jahangir, oracle};
use rainbowj::{Budget, Coloring, Graph, Variant};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Node cap applied to every search started from the page. The browser
/// build never reads a clock, so work is bounded by nodes only.
pub const MAX_SEARCH_NODES: u64 = 2_000_000;

/// Largest graph the page will draw.
pub const MAX_VERTICES: usize = 120;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexView {
    pub id: usize,
    pub x: f64,
    pub y: f64,
    /// Colour in `1..=k`, or the binary label for cordial views.
    pub value: Option<usize>,
    /// Closed neighbourhood sees every colour (always false without a colouring).
    pub rainbow: bool,
    pub hub: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct View {
    pub title: String,
    pub vertices: Vec<VertexView>,
    pub edges: Vec<(usize, usize)>,
    /// Number of distinct values in use; 2 for a binary labeling.
    pub k: usize,
    pub summary: Vec<String>,
}

fn check_size(num_vertices: usize) -> Result<(), String> {
    if num_vertices > MAX_VERTICES {
        return Err(format!("{num_vertices} vertices is too many to draw (limit {MAX_VERTICES})"));
    }
    Ok(())
}

/// Cycle vertices on a circle starting at the top, clockwise; the hub (if
/// any) in the centre.
fn circle_layout(num_cycle: usize, hub: Option<usize>) -> Vec<(f64, f64)> {
    let mut points: Vec<(f64, f64)> = (0..num_cycle)
        .map(|i| {
            let angle = std::f64::consts::TAU * i as f64 / num_cycle as f64;
            (0.5 + 0.42 * angle.sin(), 0.5 - 0.42 * angle.cos())
        })
        .collect();
    if hub.is_some() {
        points.push((0.5, 0.5));
    }
    points
}

fn layout_for(instance: &FamilyInstance, g: &Graph) -> Vec<(f64, f64)> {
    match *instance {
        FamilyInstance::Path { n } => (0..n)
            .map(|i| {
                let x = if n == 1 { 0.5 } else { 0.05 + 0.9 * i as f64 / (n - 1) as f64 };
                (x, 0.5)
            })
            .collect(),
        FamilyInstance::Cycle { c } => circle_layout(c, None),
        FamilyInstance::Wheel { .. } | FamilyInstance::Jahangir { .. } => {
            let n = g.num_vertices();
            circle_layout(n - 1, Some(n - 1))
        }
    }
}

fn build_view(
    title: String,
    g: &Graph,
    points: &[(f64, f64)],
    hub: Option<usize>,
    coloring: Option<&Coloring>,
    summary: Vec<String>,
) -> Result<View, String> {
    let rainbow = match coloring {
        Some(col) => rainbow_report(g, col).map_err(|e| e.to_string())?.rainbow_vertices,
        None => Vec::new(),
    };
    let vertices = points
        .iter()
        .enumerate()
        .map(|(id, &(x, y))| VertexView {
            id,
            x,
            y,
            value: coloring.map(|c| c.color(id)),
            rainbow: rainbow.binary_search(&id).is_ok(),
            hub: hub == Some(id),
        })
        .collect();
    Ok(View {
        title,
        vertices,
        edges: g.edges().collect(),
        k: coloring.map_or(0, Coloring::k),
        summary,
    })
}

fn jahangir_layout(n: usize, m: usize) -> Result<JahangirLayout, String> {
    let layout = generators::jahangir(n, m).map_err(|e| e.to_string())?;
    check_size(layout.graph.num_vertices())?;
    Ok(layout)
}

/// Closed-form verdict for `J(n, m)` with its constructed J-colouring drawn.
pub fn jahangir_view(n: usize, m: usize) -> Result<View, String> {
    let layout = jahangir_layout(n, m)?;
    let g = &layout.graph;
    let decision = decide_jahangir(n, m).map_err(|e| e.to_string())?;
    let mut summary = vec![
        format!("{} vertices, {} edges, {} spokes", g.num_vertices(), g.num_edges(), layout.num_spokes()),
        match decision.j_number {
            Some(k) => format!("J-colourable with J = {k} (rule: {})", decision.rule),
            None => "no J-colouring exists".to_string(),
        },
    ];
    if let Some(col) = &decision.witness {
        let report = rainbow_report(g, col).map_err(|e| e.to_string())?;
        summary.push(format!(
            "{} of {} closed neighbourhoods see all {} colours",
            report.rainbow_vertices.len(),
            g.num_vertices(),
            col.k()
        ));
    }
    let points = circle_layout(layout.hub, Some(layout.hub));
    build_view(format!("J({n},{m})"), g, &points, Some(layout.hub), decision.witness.as_ref(), summary)
}

/// Exhaustive search for the largest J- (or J*-) colouring of a small family
/// member, reported next to the closed form.
pub fn search_view(family: &str, a: usize, b: usize, jstar: bool, max_nodes: u64) -> Result<View, String> {
    let instance = match family {
        "path" => FamilyInstance::Path { n: a },
        "cycle" => FamilyInstance::Cycle { c: a },
        "wheel" => FamilyInstance::Wheel { c: a },
        "jahangir" => FamilyInstance::Jahangir { n: a, m: b },
        other => return Err(format!("unknown family '{other}'")),
    };
    let variant = if jstar { Variant::JStar } else { Variant::J };
    let g = instance.graph().map_err(|e| e.to_string())?;
    check_size(g.num_vertices())?;
    let budget = Budget::nodes(max_nodes.min(MAX_SEARCH_NODES));
    let found = oracle(&g, variant, &budget).map_err(|e| e.to_string())?;
    let mut summary = vec![match found.j_number {
        Some(k) => format!("search: {variant}-colourable, maximum k = {k}"),
        None => format!("search: no {variant}-colouring"),
    }];
    match instance.closed_form(variant) {
        Ok(closed) => summary.push(format!(
            "closed form: {closed} ({})",
            if closed.agrees_with(&found) { "agrees" } else { "DISAGREES" }
        )),
        Err(e) => summary.push(format!("closed form: {e}")),
    }
    let hub = match instance {
        FamilyInstance::Wheel { .. } | FamilyInstance::Jahangir { .. } => Some(g.num_vertices() - 1),
        _ => None,
    };
    let points = layout_for(&instance, &g);
    build_view(instance.to_string(), &g, &points, hub, found.witness.as_ref(), summary)
}

/// A cordial labeling of `J(n, m)` found by search, if one exists within budget.
pub fn cordial_view(n: usize, m: usize, max_nodes: u64) -> Result<View, String> {
    let layout = jahangir_layout(n, m)?;
    let g = &layout.graph;
    let budget = Budget::nodes(max_nodes.min(MAX_SEARCH_NODES));
    let found = find_cordial_labeling(g, &budget).map_err(|e| e.to_string())?;
    let mut summary = vec![match cordial_family_member(n, m).map_err(|e| e.to_string())? {
        Some(family) => format!("member of the cordial family {family}"),
        None => "not in either listed cordial family".to_string(),
    }];
    let points = circle_layout(layout.hub, Some(layout.hub));
    let mut vertices: Vec<VertexView> = points
        .iter()
        .enumerate()
        .map(|(id, &(x, y))| VertexView { id, x, y, value: None, rainbow: false, hub: id == layout.hub })
        .collect();
    match &found {
        Some(f) => {
            let s = labeling_stats(g, f).map_err(|e| e.to_string())?;
            summary.push(format!("cordial: v0={} v1={} e0={} e1={}", s.v0, s.v1, s.e0, s.e1));
            for (v, &label) in vertices.iter_mut().zip(f.labels()) {
                v.value = Some(label as usize);
            }
        }
        None => summary.push("no cordial labeling exists".to_string()),
    }
    Ok(View { title: format!("J({n},{m})"), vertices, edges: g.edges().collect(), k: 2, summary })
}

fn to_js(view: Result<View, String>) -> Result<String, JsError> {
    let view = view.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&view).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn jahangir(n: usize, m: usize) -> Result<String, JsError> {
    to_js(jahangir_view(n, m))
}

#[wasm_bindgen]
pub fn search(family: &str, a: usize, b: usize, jstar: bool, max_nodes: u32) -> Result<String, JsError> {
    to_js(search_view(family, a, b, jstar, u64::from(max_nodes)))
}

#[wasm_bindgen]
pub fn cordial(n: usize, m: usize, max_nodes: u32) -> Result<String, JsError> {
    to_js(cordial_view(n, m, u64::from(max_nodes)))
}
