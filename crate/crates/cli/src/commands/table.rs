use serde::Serialize;

use hypercx_core::{enumerate_triplets, Triplet};

use crate::args::{Common, Format};
use crate::commands::load;
use crate::error::{CliError, CliResult};
use crate::output::{emit, to_json_compact};

/// JSON form: decimal indices, cycle-canonical order.
#[derive(Debug, Serialize)]
pub struct TableJson {
    pub level: u32,
    pub dim: usize,
    pub triplets: Vec<Triplet>,
}

pub fn run(common: &Common) -> CliResult<()> {
    let table = load(common)?;
    let triplets = enumerate_triplets(&table).triplets;
    let text = match common.format {
        Format::Json => to_json_compact(&TableJson { level: table.level().n(), dim: table.dim(), triplets })?,
        Format::Text => triplets.iter().map(|t| t.to_hex_string() + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("i,j,sign,k\n");
            for i in 1..table.dim() {
                for j in 1..table.dim() {
                    if i != j {
                        let p = table.product(i, j);
                        s.push_str(&format!("{i},{j},{},{}\n", p.sign, p.index));
                    }
                }
            }
            s
        }
        Format::Dot => return Err(CliError::Usage("table has no dot output; use json, csv or text".into())),
    };
    emit(common.out.as_deref(), &text)
}
