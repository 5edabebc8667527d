use serde::Serialize;

use hypercx_core::{check_symplectic, matrix::mult_matrix, symplectic_form, Side, SignedPermMatrix, SymplecticReport};

use crate::args::{Format, MatricesArgs, SideArg};
use crate::commands::load;
use crate::error::{CliError, CliResult};
use crate::output::{emit, to_json_compact};

#[derive(Debug, Serialize)]
struct MatrixJson {
    side: Side,
    index: usize,
    rows: SignedPermMatrix,
}

#[derive(Debug, Serialize)]
struct SymplecticJson {
    form: SignedPermMatrix,
    report: SymplecticReport,
}

#[derive(Debug, Serialize)]
struct MatricesJson {
    level: u32,
    dim: usize,
    identity: String,
    matrices: Vec<MatrixJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    symplectic: Option<SymplecticJson>,
}

fn sides(arg: SideArg) -> &'static [Side] {
    match arg {
        SideArg::Left => &[Side::Left],
        SideArg::Right => &[Side::Right],
        SideArg::Both => &[Side::Left, Side::Right],
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

pub fn run(args: &MatricesArgs) -> CliResult<()> {
    let common = &args.common;
    let table = load(common)?;
    let dim = table.dim();
    let mut matrices = Vec::new();
    for &side in sides(args.side) {
        for index in 1..dim {
            matrices.push(MatrixJson { side, index, rows: mult_matrix(&table, index, side)? });
        }
    }
    let symplectic = if args.symplectic {
        Some(SymplecticJson { form: symplectic_form(dim)?, report: check_symplectic(&table)? })
    } else {
        None
    };
    let doc = MatricesJson {
        level: table.level().n(),
        dim,
        identity: format!("E_0 = I_{dim} (not listed)"),
        matrices,
        symplectic,
    };
    let text = match common.format {
        Format::Json => to_json_compact(&doc)?,
        Format::Text => render_text(&doc),
        Format::Csv => render_csv(&doc),
        Format::Dot => return Err(CliError::Usage("matrices have no dot output; use json, csv or text".into())),
    };
    emit(common.out.as_deref(), &text)
}

fn render_text(doc: &MatricesJson) -> String {
    let mut s = format!("level {} (dim {}); {}\n", doc.level, doc.dim, doc.identity);
    for m in &doc.matrices {
        s.push_str(&format!("\nE{} ({}):\n{}", m.index, side_name(m.side), m.rows));
    }
    if let Some(sym) = &doc.symplectic {
        let r = &sym.report;
        s.push_str(&format!("\nJ ({}x{}):\n{}", doc.dim, doc.dim, sym.form));
        for &(k, c) in &r.constants {
            s.push_str(&format!("C({},{},{}) = {c}\n", r.half, k, r.half + k));
        }
        let sign = |x: Option<i8>| match x {
            Some(1) => "+J".to_string(),
            Some(_) => "-J".to_string(),
            None => "not +-J".to_string(),
        };
        s.push_str(&format!(
            "constants hold: {}\nright_mult({}) = {}\nclosed form (1|E_{}) = {}\n",
            r.constants_hold,
            r.half,
            sign(r.right_mult_sign),
            r.half,
            sign(r.closed_form_sign)
        ));
    }
    s
}

fn render_csv(doc: &MatricesJson) -> String {
    let mut s = String::from("side,index,row");
    for c in 0..doc.dim {
        s.push_str(&format!(",c{c}"));
    }
    s.push('\n');
    let mut push = |name: &str, index: String, m: &SignedPermMatrix| {
        for (r, row) in m.rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&format!("{name},{index},{r},{}\n", cells.join(",")));
        }
    };
    for m in &doc.matrices {
        push(side_name(m.side), m.index.to_string(), &m.rows);
    }
    if let Some(sym) = &doc.symplectic {
        push("symplectic", "J".into(), &sym.form);
    }
    s
}
