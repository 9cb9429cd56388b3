use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use num::complex::Complex64;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Destination and encoding for a command's result.
pub struct Emit {
    pub format: Format,
    out: Option<PathBuf>,
}

impl Emit {
    pub fn new(format: Format, out: Option<PathBuf>) -> Self {
        Self { format, out }
    }

    fn writer(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            ),
            None => Box::new(io::stdout().lock()),
        })
    }

    pub fn json<T: Serialize>(&self, value: &T) -> anyhow::Result<()> {
        let mut w = self.writer()?;
        serde_json::to_writer_pretty(&mut w, value)?;
        writeln!(w)?;
        Ok(())
    }

    pub fn csv(
        &self,
        header: &[&str],
        rows: impl IntoIterator<Item = Vec<String>>,
    ) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_writer(self.writer()?);
        w.write_record(header)?;
        for row in rows {
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `(a,b,…)`, the same form the suites use in failure details.
pub fn point(x: &[i64]) -> String {
    let coords: Vec<String> = x.iter().map(i64::to_string).collect();
    format!("({})", coords.join(","))
}

#[derive(serde::Deserialize)]
struct RootsFile {
    roots: Vec<[f64; 2]>,
}

/// Reads the `roots` array of a saved `bethe` report.
pub fn read_roots(path: &Path) -> anyhow::Result<Vec<Complex64>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file: RootsFile = serde_json::from_str(&text)
        .with_context(|| format!("{} has no roots array", path.display()))?;
    Ok(file
        .roots
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect())
}
