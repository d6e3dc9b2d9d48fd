use std::io::Write;

use tree_spectra::graph::{
    build_double_starlike, build_family, build_path, build_starlike, DoubleStarlikeSpec, Family,
    StarlikeSpec, Tree,
};
use tree_spectra::io::parse_edge_list;
use tree_spectra::randic::randic_indices_tree;
use tree_spectra::spectra::reconcile;

use crate::record::OutputRecord;
use crate::{CliError, ComputeArgs, Format, Source, EXIT_BAD_INPUT};

/// Resolves the input flags to a tree and a short description of it.
pub fn load_tree(source: &Source) -> Result<(Tree, String), CliError> {
    if let Some(path) = &source.file {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::new(
                EXIT_BAD_INPUT,
                format!("cannot read {}: {e}", path.display()),
            )
        })?;
        let graph = parse_edge_list(&text)
            .map_err(|e| CliError::new(EXIT_BAD_INPUT, format!("{}: {e}", path.display())))?;
        return Ok((Tree::try_from(graph)?, format!("file:{}", path.display())));
    }
    if let Some(n) = source.path {
        return Ok((build_path(n)?, format!("P_{n}")));
    }
    if let Some(lengths) = &source.starlike {
        let spec = StarlikeSpec::new(lengths.clone())?;
        return Ok((build_starlike(&spec), spec.to_string()));
    }
    if let Some(parts) = &source.double_starlike {
        let &[m, p, q] = parts.as_slice() else {
            return Err(CliError::new(
                EXIT_BAD_INPUT,
                "--double-starlike expects exactly three values m,p,q",
            ));
        };
        let spec = DoubleStarlikeSpec::new(m, p, q)?;
        return Ok((build_double_starlike(&spec), spec.to_string()));
    }
    if let Some(n) = source.star {
        let graph = build_family(Family::Star(n))?;
        return Ok((Tree::try_from(graph)?, format!("S_{n}")));
    }
    Err(CliError::new(EXIT_BAD_INPUT, "no input given"))
}

pub fn compute_record(tree: &Tree, input: String, tol: f64) -> Result<OutputRecord, CliError> {
    let indices = randic_indices_tree(tree, -1)?;
    if tree.order() == 1 {
        return Ok(OutputRecord::new(input, 1, &indices, None, 0.0, tol)?);
    }
    let report = reconcile(tree, tol)?;
    Ok(OutputRecord::new(
        input,
        tree.order(),
        &indices,
        Some(&report.exact),
        report.max_abs_residual,
        tol,
    )?)
}

pub fn run(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (tree, input) = load_tree(&args.source)?;
    let record = compute_record(&tree, input, args.tol)?;
    match args.format {
        Format::Json => {
            let json = serde_json::to_string_pretty(&record).expect("record serializes");
            writeln!(out, "{json}")?;
        }
        Format::Text => write_text(&record, out)?,
    }
    Ok(())
}

fn write_text(r: &OutputRecord, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:<12}{}", "input", r.input)?;
    writeln!(out, "{:<12}{}", "n", r.n)?;
    writeln!(out, "{:<12}{}", "k", r.k)?;
    writeln!(out, "{:<12}{}", "indices", r.indices.join(", "))?;
    writeln!(out, "{:<12}{}", "charpoly", r.charpoly.join(", "))?;
    writeln!(out, "{:<12}{}", "psi", r.psi.join(", "))?;
    writeln!(out, "eigenvalues")?;
    for e in &r.eigenvalues {
        writeln!(
            out,
            "  {:>20.15}  x{:<3} {}",
            e.value,
            e.multiplicity,
            e.sqrt_form.as_deref().unwrap_or("")
        )?;
    }
    writeln!(out, "{:<12}{:e}", "residual", r.residual)?;
    writeln!(out, "{:<12}{}", "matched", r.matched)
}
