//! The normalization loop and the Grushko decomposition by cutting.

use serde::Serialize;
use thiserror::Error;

use crate::complex::{CellCounts, ComplexError, EdgeRef, Flat, TubularComplex};
use crate::graph::connected_components;
use crate::simplify::{
    cascade_at, collapse_hanging_trees, find_witness, first_thickness_one_edge, remove_rudimentary_edges, Location,
    SimplifyError, Witness, WitnessKind,
};
use crate::sl_move::{first_bm2_failure, open_at, plan_opening, OpeningSummary, SlMoveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    SlMove(#[from] SlMoveError),
    #[error(transparent)]
    Simplify(#[from] SimplifyError),
    #[error("witness does not hold: {0}")]
    WitnessFailed(Witness),
    #[error("cannot cut along a thickness-one edge; run the cascade first")]
    UnsupportedWitness(Witness),
    #[error("replay diverged at trace event {index}")]
    ReplayMismatch { index: usize },
}

/// Where normalization stopped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    /// Contractible.
    Point,
    /// Every link satisfies both Brady-Meier conditions.
    BradyMeier,
    WedgeLike { witness: Witness },
    /// No squares: a graph with free fundamental group of this rank.
    FreeGraph { rank: usize },
}

impl Outcome {
    /// Wedge-like in the broad sense, including pure graphs.
    pub fn is_wedge_like(&self) -> bool {
        matches!(self, Outcome::WedgeLike { .. } | Outcome::FreeGraph { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Point => "point",
            Outcome::BradyMeier => "brady-meier",
            Outcome::WedgeLike { .. } => "wedge-like",
            Outcome::FreeGraph { .. } => "free-graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    CollapseHangingTrees,
    RemoveRudimentary,
    SlMove(OpeningSummary),
    Cascade { edge: EdgeRef },
    Cut {
        witness: Witness,
        pieces: usize,
        free_rank_delta: usize,
    },
}

/// One applied move with the cell counts around it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    /// Nesting depth in the cut recursion; zero for a plain normalization.
    pub depth: usize,
    #[serde(flatten)]
    pub action: Move,
    pub before: CellCounts,
    pub after: CellCounts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub outcome: Outcome,
    /// The homotopy equivalent complex normalization stopped at.
    pub complex: TubularComplex,
    pub trace: Vec<TraceEvent>,
    /// Squares when the loop first reached the thickness check.
    pub squares_at_loop: usize,
}

impl NormalForm {
    pub fn move_count(&self) -> usize {
        self.trace.len()
    }

    pub fn sl_moves(&self) -> usize {
        self.trace
            .iter()
            .filter(|e| matches!(e.action, Move::SlMove(_)))
            .count()
    }
}

fn event(depth: usize, action: Move, before: &TubularComplex, after: &TubularComplex) -> TraceEvent {
    TraceEvent {
        depth,
        action,
        before: before.cell_counts(),
        after: after.cell_counts(),
    }
}

/// Runs the seven-step loop: collapse hanging trees, remove rudimentary
/// edges, stop on no squares, stop on an edge of thickness at most one,
/// stop on a disconnected link, stop when the second Brady-Meier condition
/// holds, otherwise open at the least failing vertex and repeat from the
/// thickness check.
pub fn normalize(c: &TubularComplex) -> Result<NormalForm, EngineError> {
    normalize_observed(c, &mut |_| {})
}

/// [`normalize`] reporting each event as it is applied.
pub fn normalize_observed(
    c: &TubularComplex,
    observer: &mut dyn FnMut(&TraceEvent),
) -> Result<NormalForm, EngineError> {
    c.ensure_valid()?;
    let mut trace = Vec::new();
    let mut record = |e: TraceEvent, trace: &mut Vec<TraceEvent>| {
        observer(&e);
        trace.push(e);
    };

    let mut x = c.clone();
    let collapsed = collapse_hanging_trees(&x);
    if collapsed != x {
        record(event(0, Move::CollapseHangingTrees, &x, &collapsed), &mut trace);
        x = collapsed;
    }
    let reduced = remove_rudimentary_edges(&x);
    if reduced != x {
        record(event(0, Move::RemoveRudimentary, &x, &reduced), &mut trace);
        x = reduced;
    }

    let squares_at_loop = x.square_count();
    if squares_at_loop == 0 {
        let outcome = if x.cell_counts().vertices == 1 {
            Outcome::Point
        } else {
            Outcome::FreeGraph { rank: x.betti1() }
        };
        return Ok(NormalForm {
            outcome,
            complex: x,
            trace,
            squares_at_loop,
        });
    }

    let mut openings = 0;
    let outcome = loop {
        if let Some(witness) = find_witness(&x) {
            break Outcome::WedgeLike { witness };
        }
        let Some((s, v, cut)) = first_bm2_failure(&x)? else {
            break Outcome::BradyMeier;
        };
        let plan = plan_opening(&x, s, v, cut)?;
        let opened = open_at(&x, &plan)?;
        record(event(0, Move::SlMove(OpeningSummary::from(&plan)), &x, &opened), &mut trace);
        x = opened;
        openings += 1;
        assert!(openings <= squares_at_loop, "opening count exceeded the square count");
    };
    Ok(NormalForm {
        outcome,
        complex: x,
        trace,
        squares_at_loop,
    })
}

/// Re-applies the moves of a normalization trace to its input.
pub fn replay(c: &TubularComplex, trace: &[TraceEvent]) -> Result<TubularComplex, EngineError> {
    Ok(replay_states(c, trace)?.pop().unwrap_or_else(|| c.clone()))
}

/// The complex after each event of a normalization trace.
pub fn replay_states(c: &TubularComplex, trace: &[TraceEvent]) -> Result<Vec<TubularComplex>, EngineError> {
    let mut states = Vec::with_capacity(trace.len());
    let mut x = c.clone();
    for (index, e) in trace.iter().enumerate() {
        if x.cell_counts() != e.before {
            return Err(EngineError::ReplayMismatch { index });
        }
        x = match &e.action {
            Move::CollapseHangingTrees => collapse_hanging_trees(&x),
            Move::RemoveRudimentary => remove_rudimentary_edges(&x),
            Move::SlMove(s) => {
                let cut = crate::graph::HalfEdge {
                    edge: s.cut_edge,
                    end: s.cut_end,
                };
                let plan = plan_opening(&x, s.graph, s.vertex, cut)?;
                open_at(&x, &plan)?
            }
            Move::Cascade { edge } => cascade_at(&x, *edge)?,
            Move::Cut { .. } => return Err(EngineError::ReplayMismatch { index }),
        };
        if x.cell_counts() != e.after {
            return Err(EngineError::ReplayMismatch { index });
        }
        states.push(x.clone());
    }
    Ok(states)
}

/// Result of one cut: the connected pieces and how many free `Z` factors
/// split off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub pieces: Vec<TubularComplex>,
    pub free_rank_delta: usize,
}

/// Cuts along a thickness-zero edge or at a vertex with disconnected link.
///
/// Cutting a point into `k` copies and getting `m` connected pieces splits
/// off `k - m` free factors: the pieces and the cut point form a connected
/// graph with `m + 1` vertices and `k` edges.
pub fn cut(c: &TubularComplex, w: Witness) -> Result<Cut, EngineError> {
    if !w.verify(c) {
        return Err(EngineError::WitnessFailed(w));
    }
    let mut flat = Flat::from_complex(c);
    let copies = match (w.kind, w.location) {
        (WitnessKind::ThicknessZeroEdge, Location::Edge(e)) => {
            let global = flat.edge(e.graph, e.edge);
            flat.edge_alive[global] = false;
            2
        }
        (WitnessKind::DisconnectedLink, Location::Vertex(v)) => {
            let link = c.vertex_link(v.graph, v.vertex)?;
            let classes = connected_components(&link.graph);
            let name = c.graphs()[v.graph].name.clone();
            for class in &classes[1..] {
                let copy = flat.add_vertex(&name);
                for &x in class {
                    if let crate::complex::LinkVertex::Vertical(h) = link.vertices[x] {
                        let global = flat.edge(v.graph, h.edge);
                        flat.edges[global][h.end.index()] = copy;
                    }
                }
            }
            classes.len()
        }
        _ => return Err(EngineError::UnsupportedWitness(w)),
    };
    let pieces = flat.rebuild().connected_pieces();
    debug_assert!(pieces.iter().all(|p| p.validate().is_empty()));
    Ok(Cut {
        free_rank_delta: copies - pieces.len(),
        pieces,
    })
}

/// One cut in the recursion; `parent` is the cut that produced the complex
/// being cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutRecord {
    pub parent: Option<usize>,
    pub depth: usize,
    pub cascades: Vec<EdgeRef>,
    pub witness: Witness,
    pub pieces: usize,
    pub free_rank_delta: usize,
    pub squares: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrushkoDecomposition {
    /// Brady-Meier pieces sorted by square count, then canonical form.
    pub pieces: Vec<TubularComplex>,
    pub free_rank: usize,
    pub cut_log: Vec<CutRecord>,
    pub trace: Vec<TraceEvent>,
}

/// Normalizes, cuts wedge-like outcomes and recurses on the pieces.
pub fn grushko(c: &TubularComplex) -> Result<GrushkoDecomposition, EngineError> {
    grushko_observed(c, &mut |_| {})
}

/// [`grushko`] reporting each event as it is applied.
pub fn grushko_observed(
    c: &TubularComplex,
    observer: &mut dyn FnMut(&TraceEvent),
) -> Result<GrushkoDecomposition, EngineError> {
    c.ensure_valid()?;
    let mut out = GrushkoDecomposition {
        pieces: Vec::new(),
        free_rank: 0,
        cut_log: Vec::new(),
        trace: Vec::new(),
    };
    let mut push = |e: TraceEvent, out: &mut GrushkoDecomposition| {
        observer(&e);
        out.trace.push(e);
    };
    // Depth-first; pieces of a cut are visited in the order produced.
    let mut stack: Vec<(TubularComplex, Option<usize>, usize)> = vec![(c.clone(), None, 0)];
    while let Some((x, parent, depth)) = stack.pop() {
        let nf = normalize(&x)?;
        for e in &nf.trace {
            push(TraceEvent { depth, ..e.clone() }, &mut out);
        }
        match nf.outcome {
            Outcome::Point => {}
            Outcome::FreeGraph { rank } => out.free_rank += rank,
            Outcome::BradyMeier => out.pieces.push(nf.complex),
            Outcome::WedgeLike { .. } => {
                let mut y = nf.complex;
                let mut cascades = Vec::new();
                loop {
                    while let Some(e) = first_thickness_one_edge(&y) {
                        let next = cascade_at(&y, e)?;
                        push(event(depth, Move::Cascade { edge: e }, &y, &next), &mut out);
                        cascades.push(e);
                        y = next;
                    }
                    let collapsed = collapse_hanging_trees(&y);
                    if collapsed != y {
                        push(event(depth, Move::CollapseHangingTrees, &y, &collapsed), &mut out);
                    }
                    let reduced = remove_rudimentary_edges(&collapsed);
                    if reduced != collapsed {
                        push(event(depth, Move::RemoveRudimentary, &collapsed, &reduced), &mut out);
                    }
                    if reduced == y {
                        break;
                    }
                    y = reduced;
                }
                let witness = if y.square_count() == 0 { None } else { find_witness(&y) };
                let Some(witness) = witness else {
                    // The cascade changed the complex; normalize it afresh.
                    stack.push((y, parent, depth));
                    continue;
                };
                let split = cut(&y, witness)?;
                let id = out.cut_log.len();
                out.cut_log.push(CutRecord {
                    parent,
                    depth,
                    cascades,
                    witness,
                    pieces: split.pieces.len(),
                    free_rank_delta: split.free_rank_delta,
                    squares: y.square_count(),
                });
                let after = split
                    .pieces
                    .iter()
                    .fold(CellCounts::default(), |acc, p| acc + p.cell_counts());
                let e = TraceEvent {
                    depth,
                    action: Move::Cut {
                        witness,
                        pieces: split.pieces.len(),
                        free_rank_delta: split.free_rank_delta,
                    },
                    before: y.cell_counts(),
                    after,
                };
                push(e, &mut out);
                out.free_rank += split.free_rank_delta;
                for p in split.pieces.into_iter().rev() {
                    stack.push((p, Some(id), depth + 1));
                }
            }
        }
    }
    out.pieces
        .sort_by_cached_key(|p| (p.square_count(), crate::io::to_canonical_json(p)));
    Ok(out)
}
