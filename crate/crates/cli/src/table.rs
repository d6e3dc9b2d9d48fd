use std::io::Write;

use serde::Serialize;
use tree_spectra::table::starlike8_table;

use crate::{CliError, Format, TableArgs, TableName};

#[derive(Serialize)]
struct Row {
    partition: String,
    indices: Vec<String>,
    spectrum: String,
    eigenvalues: Vec<f64>,
}

pub fn run(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let TableName::Starlike8 = args.name;
    let rows: Vec<Row> = starlike8_table()?
        .into_iter()
        .map(|row| Row {
            partition: row
                .spec
                .branch_lengths()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
            // R^(0) = 1 is implied
            indices: row.indices.values()[1..]
                .iter()
                .map(ToString::to_string)
                .collect(),
            spectrum: row.spectrum.summary(3),
            eigenvalues: row.spectrum.eigenvalue_list(),
        })
        .collect();
    match args.format {
        Format::Json => {
            let json = serde_json::to_string_pretty(&rows).expect("rows serialize");
            writeln!(out, "{json}")?;
        }
        Format::Text => {
            let width = rows
                .iter()
                .map(|r| r.indices.join(", ").len())
                .max()
                .unwrap_or(0);
            writeln!(
                out,
                "{:>3}  {:<12}  {:<width$}  spectrum",
                "#", "partition", "indices"
            )?;
            for (i, row) in rows.iter().enumerate() {
                writeln!(
                    out,
                    "{:>3}  {:<12}  {:<width$}  {}",
                    i + 1,
                    row.partition,
                    row.indices.join(", "),
                    row.spectrum
                )?;
            }
        }
    }
    Ok(())
}
