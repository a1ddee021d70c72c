use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::args::{Format, RunArgs};
use crate::error::{CliError, Result};
use crate::svg::Chart;

/// Collects the text report and writes the requested files.
pub struct Sink {
    formats: BTreeSet<Format>,
    dir: PathBuf,
    copy_text: bool,
    report_name: String,
    text: String,
}

impl Sink {
    /// `command` names the text copy written under `--out`.
    pub fn new(run: &RunArgs, command: &str) -> Result<Self> {
        let formats: BTreeSet<Format> = run.format.iter().copied().collect();
        let dir = run.out.clone().unwrap_or_else(|| PathBuf::from("."));
        let needs_dir = run.out.is_some() || formats.iter().any(|f| *f != Format::Text);
        if needs_dir {
            fs::create_dir_all(&dir).map_err(|source| CliError::Write { path: dir.clone(), source })?;
        }
        Ok(Self { formats, dir, copy_text: run.out.is_some(), report_name: format!("{command}.txt"), text: String::new() })
    }

    pub fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// Appends a block that already ends in a newline (or adds one).
    pub fn block(&mut self, s: impl AsRef<str>) {
        let s = s.as_ref();
        self.text.push_str(s);
        if !s.ends_with('\n') {
            self.text.push('\n');
        }
    }

    pub fn blank(&mut self) {
        self.text.push('\n');
    }

    pub fn heading(&mut self, title: &str) {
        let _ = writeln!(self.text, "\n{title}\n{}", "-".repeat(title.chars().count()));
    }

    fn write(&self, name: &str, contents: &str) -> Result<()> {
        write_file(&self.dir.join(name), contents)
    }

    pub fn json<T: Serialize>(&self, name: &str, value: &T) -> Result<()> {
        if self.wants(Format::Json) {
            self.write(name, &to_json(value))?;
        }
        Ok(())
    }

    pub fn csv(&self, name: &str, contents: &str) -> Result<()> {
        if self.wants(Format::Csv) {
            self.write(name, contents)?;
        }
        Ok(())
    }

    pub fn svg(&self, name: &str, chart: &Chart) -> Result<()> {
        if self.wants(Format::Svg) {
            self.write(name, &chart.render())?;
        }
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        if !self.wants(Format::Text) {
            return Ok(());
        }
        if self.copy_text {
            self.write(&self.report_name, &self.text)?;
        }
        let mut out = std::io::stdout().lock();
        out.write_all(self.text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|source| CliError::Write { path: PathBuf::from("<stdout>"), source })
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

/// Fixed-width number cell; non-finite values print as `NA`.
pub fn num(v: f64, width: usize, prec: usize) -> String {
    if v.is_finite() {
        format!("{v:>width$.prec$}")
    } else {
        format!("{:>width$}", "NA")
    }
}

pub fn opt_num(v: Option<f64>, width: usize, prec: usize) -> String {
    v.map_or_else(|| format!("{:>width$}", "-"), |x| num(x, width, prec))
}
