use std::fmt;
use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Why a command did not succeed; maps onto the process exit status.
#[derive(Debug)]
pub enum Failure {
    /// Something checked came out false. The output already says what.
    Verification,
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Self::Verification => 1,
            Self::Usage(_) => 2,
            Self::Io(_) => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Self::Verification => None,
            Self::Usage(m) | Self::Io(m) => Some(m),
        }
    }

    pub fn usage(msg: impl fmt::Display) -> Self {
        Self::Usage(msg.to_string())
    }

    pub fn io(msg: impl fmt::Display) -> Self {
        Self::Io(msg.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::io(e)
    }
}

pub type CmdResult = Result<(), Failure>;

pub struct Out {
    inner: io::BufWriter<io::StdoutLock<'static>>,
}

impl Out {
    pub fn new() -> Self {
        Self {
            inner: io::BufWriter::new(io::stdout().lock()),
        }
    }

    pub fn line(&mut self, text: impl fmt::Display) -> CmdResult {
        writeln!(self.inner, "{text}")?;
        Ok(())
    }

    /// Space-separated values on one line.
    pub fn row<T: fmt::Display>(&mut self, items: impl IntoIterator<Item = T>) -> CmdResult {
        let joined: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
        self.line(joined.join(" "))
    }

    pub fn json(&mut self, value: &Value) -> CmdResult {
        serde_json::to_writer(&mut self.inner, value).map_err(Failure::io)?;
        self.line("")
    }

    pub fn csv<R, F>(&mut self, header: &[&str], records: R) -> CmdResult
    where
        R: IntoIterator<Item = Vec<F>>,
        F: AsRef<[u8]>,
    {
        let mut w = csv::Writer::from_writer(&mut self.inner);
        w.write_record(header).map_err(Failure::io)?;
        for r in records {
            w.write_record(r).map_err(Failure::io)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn finish(mut self) -> CmdResult {
        self.inner.flush()?;
        Ok(())
    }
}
