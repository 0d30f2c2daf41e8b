//! Drives the sweep report from code and writes CSV and JSON next to each
//! other, the same output the `spinphase sweep` command produces.
//!
//! ```text
//! cargo run --release --example csv_sweep -- /tmp/sweep
//! ```

use std::path::PathBuf;

use spinphase::commands::{sweep, OutputFormat, SweepSpec};

fn main() -> spinphase::Result<()> {
    let stem = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("spinphase-sweep"));
    let spec = SweepSpec {
        points: 33,
        ..SweepSpec::default()
    };
    let report = sweep(&spec)?;

    for (format, ext) in [(OutputFormat::Csv, "csv"), (OutputFormat::Json, "json")] {
        let path = stem.with_extension(ext);
        std::fs::write(&path, report.render(format)).expect("output directory is writable");
        println!("wrote {}", path.display());
    }
    println!(
        "max |gamma error| = {:.3e}, max |C error| = {:.3e}, pass = {}",
        report.summary.max_abs_err_gamma, report.summary.max_abs_err_c, report.summary.pass
    );
    Ok(())
}
