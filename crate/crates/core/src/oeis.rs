//! OEIS b-file parsing and a fixture cache with optional remote refresh.
//!
//! A b-file is plain text with one `index value` pair per line; `#` lines and
//! blank lines are ignored. Cached files are named `bNNNNNN.txt` after the
//! A-number.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use thiserror::Error;

/// Overrides the fixture directory.
pub const FIXTURE_DIR_ENV: &str = "INSETS_FIXTURES";
/// Any value other than `0`, `false` or empty forbids network access.
pub const OFFLINE_ENV: &str = "INSETS_OFFLINE";
/// `{id}` expands to the A-number, `{digits}` to its six digits.
pub const DEFAULT_REMOTE: &str = "https://oeis.org/{id}/b{digits}.txt";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("{0:?} is not an OEIS id of the form A######")]
    InvalidId(String),
    #[error("{id} line {line}: malformed entry {text:?}")]
    Malformed {
        id: String,
        line: usize,
        text: String,
    },
    #[error("{id} line {line}: index {found} does not follow {previous}")]
    NonContiguous {
        id: String,
        line: usize,
        previous: i64,
        found: i64,
    },
    #[error("{id}: no fixture in {dir} and network access is disabled")]
    NotFound { id: String, dir: PathBuf },
    #[error("{id}: no fixture and no remote source configured")]
    NoRemote { id: String },
    #[error("fetching {url}: {reason}")]
    Network { url: String, reason: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

/// Parsed b-file. Indices are strictly increasing and contiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub oeis_id: String,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn last_index(&self) -> Option<i64> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let first = self.first_index()?;
        let pos = usize::try_from(index.checked_sub(first)?).ok()?;
        self.entries.get(pos).map(|e| &e.1)
    }
}

fn check_id(oeis_id: &str) -> Result<&str, OeisError> {
    let digits = oeis_id
        .strip_prefix('A')
        .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()))
        .ok_or_else(|| OeisError::InvalidId(oeis_id.to_string()))?;
    Ok(digits)
}

pub fn parse_bfile(text: &str, oeis_id: &str) -> Result<BFile, OeisError> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::Malformed {
            id: oeis_id.to_string(),
            line: i + 1,
            text: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigInt = value.parse().map_err(|_| malformed())?;
        if let Some(&(previous, _)) = entries.last() {
            if index != previous + 1 {
                return Err(OeisError::NonContiguous {
                    id: oeis_id.to_string(),
                    line: i + 1,
                    previous,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile {
        oeis_id: oeis_id.to_string(),
        entries,
    })
}

/// Narrow transport so tests can substitute the network.
pub trait Transport: Send + Sync {
    fn fetch_text(&self, url: &str) -> Result<String, String>;
}

/// Blocking HTTP(S) transport.
#[derive(Debug, Default, Clone, Copy)]
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn fetch_text(&self, url: &str) -> Result<String, String> {
        let mut response = ureq::get(url).call().map_err(|e| e.to_string())?;
        response
            .body_mut()
            .read_to_string()
            .map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheConfig {
    pub fixture_dir: PathBuf,
    pub remote_base_url: Option<String>,
    pub offline: bool,
}

impl CacheConfig {
    pub fn offline(fixture_dir: impl Into<PathBuf>) -> Self {
        Self {
            fixture_dir: fixture_dir.into(),
            remote_base_url: None,
            offline: true,
        }
    }

    pub fn online(fixture_dir: impl Into<PathBuf>, remote_base_url: impl Into<String>) -> Self {
        Self {
            fixture_dir: fixture_dir.into(),
            remote_base_url: Some(remote_base_url.into()),
            offline: false,
        }
    }

    /// Applies the environment overrides on top of `default_dir`.
    pub fn from_env(default_dir: impl Into<PathBuf>) -> Self {
        let fixture_dir = std::env::var_os(FIXTURE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| default_dir.into());
        let offline = std::env::var(OFFLINE_ENV)
            .map(|v| !matches!(v.trim(), "" | "0" | "false"))
            .unwrap_or(false);
        Self {
            fixture_dir,
            remote_base_url: Some(DEFAULT_REMOTE.to_string()),
            offline,
        }
    }

    pub fn fixture_path(&self, oeis_id: &str) -> Result<PathBuf, OeisError> {
        let digits = check_id(oeis_id)?;
        Ok(self.fixture_dir.join(format!("b{digits}.txt")))
    }

    fn remote_url(&self, oeis_id: &str) -> Result<Option<String>, OeisError> {
        let digits = check_id(oeis_id)?;
        Ok(self
            .remote_base_url
            .as_ref()
            .map(|t| t.replace("{id}", oeis_id).replace("{digits}", digits)))
    }
}

/// Fixture cache bound to one transport.
pub struct OeisCache {
    cfg: CacheConfig,
    transport: Box<dyn Transport>,
}

impl OeisCache {
    pub fn new(cfg: CacheConfig) -> Self {
        Self::with_transport(cfg, HttpTransport)
    }

    pub fn with_transport(cfg: CacheConfig, transport: impl Transport + 'static) -> Self {
        Self {
            cfg,
            transport: Box::new(transport),
        }
    }

    pub fn config(&self) -> &CacheConfig {
        &self.cfg
    }

    /// Reads the cached fixture, fetching and persisting it first when it is
    /// missing and network access is allowed.
    pub fn load(&self, oeis_id: &str) -> Result<BFile, OeisError> {
        let path = self.cfg.fixture_path(oeis_id)?;
        match fs::read_to_string(&path) {
            Ok(text) => parse_bfile(&text, oeis_id),
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                if self.cfg.offline {
                    return Err(OeisError::NotFound {
                        id: oeis_id.to_string(),
                        dir: self.cfg.fixture_dir.clone(),
                    });
                }
                self.refresh(oeis_id)
            }
            Err(source) => Err(OeisError::Io { path, source }),
        }
    }

    /// Fetches the remote b-file, stores it verbatim and parses it. The text
    /// is validated before anything is written.
    pub fn refresh(&self, oeis_id: &str) -> Result<BFile, OeisError> {
        let path = self.cfg.fixture_path(oeis_id)?;
        if self.cfg.offline {
            return Err(OeisError::NotFound {
                id: oeis_id.to_string(),
                dir: self.cfg.fixture_dir.clone(),
            });
        }
        let url = self
            .cfg
            .remote_url(oeis_id)?
            .ok_or_else(|| OeisError::NoRemote {
                id: oeis_id.to_string(),
            })?;
        let text = self
            .transport
            .fetch_text(&url)
            .map_err(|reason| OeisError::Network {
                url: url.clone(),
                reason,
            })?;
        let parsed = parse_bfile(&text, oeis_id)?;
        write_atomically(&path, &text)?;
        Ok(parsed)
    }
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

/// Writes to a unique temporary name in the same directory, then renames over
/// the target, so readers never see a partial file.
fn write_atomically(path: &Path, text: &str) -> Result<(), OeisError> {
    let io_err = |source| OeisError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(io_err)?;
    let tmp = path.with_extension(format!(
        "txt.tmp-{}-{}",
        std::process::id(),
        TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::write(&tmp, text).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(e)
    })
}

/// [`OeisCache::load`] over HTTP.
pub fn load(oeis_id: &str, cfg: &CacheConfig) -> Result<BFile, OeisError> {
    OeisCache::new(cfg.clone()).load(oeis_id)
}
