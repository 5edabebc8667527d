use serde::Serialize;

use hypercx_core::scan::{
    anticommutation_graph_for, search_monomial_extensions, volume_element, Cliff15Report, MonomialSearchReport,
};
use hypercx_core::{
    hurwitz_radon, max_anticommuting_sets, no_sixteen_dim_cliff15, CliqueSearch, ExtensionReport, Side,
};

use crate::args::{Format, ScanArgs, SideArg};
use crate::commands::load;
use crate::error::{CliError, CliResult};
use crate::output::{emit, to_json};

#[derive(Debug, Serialize)]
pub struct HurwitzRadonCheck {
    pub rho: u64,
    pub rho_minus_one: u64,
    pub max_clique: usize,
    /// Clique size equals `rho - 1`.
    pub attained: bool,
    /// Clique size does not exceed `rho - 1`.
    pub within_bound: bool,
}

#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub level: u32,
    pub dim: usize,
    pub side: Side,
    pub vertices: usize,
    pub edges: usize,
    pub non_edges: Vec<(usize, usize)>,
    pub cliques: CliqueSearch,
    pub hurwitz_radon: HurwitzRadonCheck,
    /// Volume element of the first maximum clique.
    pub extension: Option<ExtensionReport>,
    pub cliff15: Option<Cliff15Report>,
    pub monomial_search: Option<MonomialSearchReport>,
}

pub fn run(args: &ScanArgs) -> CliResult<()> {
    let common = &args.common;
    let side = match args.side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
        SideArg::Both => return Err(CliError::Usage("scan takes --side left or --side right".into())),
    };
    let table = load(common)?;
    let graph = anticommutation_graph_for(&table, side)?;
    let budget = common.budget();
    let cliques = max_anticommuting_sets(&graph, budget.search_nodes);
    let rho = hurwitz_radon(table.dim() as u64)?;
    let hr = HurwitzRadonCheck {
        rho,
        rho_minus_one: rho - 1,
        max_clique: cliques.max_size,
        attained: cliques.max_size as u64 == rho - 1,
        within_bound: (cliques.max_size as u64) < rho,
    };
    let extension = cliques.cliques.first().map(|c| volume_element(&table, c, side)).transpose()?;
    let level4 = table.level().n() == 4 && side == Side::Left;
    let cliff15 = level4.then(|| no_sixteen_dim_cliff15(&table)).transpose()?;
    let monomial_search = level4
        .then(|| search_monomial_extensions(&table, &(1..=8).collect::<Vec<_>>(), &(9..=15).collect::<Vec<_>>()))
        .transpose()?;

    let report = ScanReport {
        level: table.level().n(),
        dim: table.dim(),
        side,
        vertices: graph.vertex_count(),
        edges: graph.edges().len(),
        non_edges: graph.non_edges(),
        cliques,
        hurwitz_radon: hr,
        extension,
        cliff15,
        monomial_search,
    };
    let text = match common.format {
        Format::Json => to_json(&report)?,
        Format::Dot => graph.to_dot(),
        Format::Text => render_text(&report),
        Format::Csv => {
            let mut s = String::from("clique,size,indices\n");
            for (n, c) in report.cliques.cliques.iter().enumerate() {
                let idx: Vec<String> = c.iter().map(ToString::to_string).collect();
                s.push_str(&format!("{n},{},{}\n", c.len(), idx.join(" ")));
            }
            s
        }
    };
    emit(common.out.as_deref(), &text)?;
    if report.cliques.budget_exhausted {
        return Err(CliError::Budget(format!(
            "clique search stopped after {} nodes; best size {}, upper bound {}",
            report.cliques.nodes, report.cliques.max_size, report.cliques.upper_bound
        )));
    }
    Ok(())
}

fn render_text(r: &ScanReport) -> String {
    let mut s = format!(
        "level {} (dim {}), {:?} multiplication\nanticommuting pairs: {} of {}\n",
        r.level,
        r.dim,
        r.side,
        r.edges,
        r.vertices * r.vertices.saturating_sub(1) / 2
    );
    s.push_str(&format!(
        "maximum clique size: {}{}\n",
        r.cliques.max_size,
        if r.cliques.exact { "" } else { " (search incomplete)" }
    ));
    for c in &r.cliques.cliques {
        let idx: Vec<String> = c.iter().map(ToString::to_string).collect();
        s.push_str(&format!("  {{{}}}\n", idx.join(", ")));
    }
    let hr = &r.hurwitz_radon;
    s.push_str(&format!(
        "rho({}) - 1 = {}; clique {} ({})\n",
        r.dim,
        hr.rho_minus_one,
        hr.max_clique,
        if hr.attained {
            "attained"
        } else if hr.within_bound {
            "below bound"
        } else {
            "ABOVE BOUND"
        }
    ));
    if let Some(e) = &r.extension {
        s.push_str(&format!(
            "volume element of {:?}: square {}, anticommutes with all: {}, commutes with all: {}\n",
            e.base,
            match e.square_sign {
                Some(1) => "+I",
                Some(_) => "-I",
                None => "not +-I (invalid)",
            },
            e.anticommutes_with_all,
            e.commutes_with_all
        ));
    }
    if let Some(c) = &r.cliff15 {
        s.push_str(&format!(
            "Cliff(15) on R^16: {} failing pairs among E1..E15, max clique {} < 15: {}\n",
            c.failing_count, c.max_clique, c.confirmed
        ));
    }
    if let Some(m) = &r.monomial_search {
        s.push_str(&format!(
            "monomial sign search over supports {:?}: {} candidates, {} square -I, {} square +I\n",
            m.supports, m.candidates, m.square_minus_one, m.square_plus_one
        ));
    }
    s
}
