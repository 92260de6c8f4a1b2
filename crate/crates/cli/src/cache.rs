//! On-disk cache of reduced Gröbner bases, one text file per scheme and
//! order. Bases are re-verified when loaded.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use diagcomm::groebner::GroebnerBasis;
use diagcomm::polyring::{Ring, TermOrder};
use diagcomm::schemes::SchemeKey;
use diagcomm::{Basis, Ideal, Rational};

/// S-pairs re-reduced when a cached basis is loaded.
pub const SPOT_CHECK_PAIRS: usize = 200;

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    /// A file was present but failed verification.
    Rejected,
}

impl Cache {
    pub fn new(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn header(key: &SchemeKey, order: &TermOrder) -> String {
        format!("# {key} {}", order.name())
    }

    pub fn path(&self, key: &SchemeKey, order: &TermOrder) -> PathBuf {
        let stem: String = key
            .to_string()
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '=' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        self.dir.join(format!("{stem}.{}.gb", order.name()))
    }

    pub fn load(
        &self,
        key: &SchemeKey,
        order: &TermOrder,
        source: &Ideal,
        ring: &Ring,
    ) -> (Option<Basis>, Lookup) {
        let Ok(text) = fs::read_to_string(self.path(key, order)) else {
            return (None, Lookup::Miss);
        };
        let mut lines = text.lines();
        if lines.next() != Some(Self::header(key, order).as_str()) {
            return (None, Lookup::Rejected);
        }
        let basis: Option<Vec<_>> = lines
            .filter(|l| !l.is_empty())
            .map(|l| ring.parse::<Rational>(l).ok())
            .collect();
        let Some(basis) = basis else {
            return (None, Lookup::Rejected);
        };
        if basis.iter().any(|g| g.nvars() != ring.nvars()) {
            return (None, Lookup::Rejected);
        }
        let gb = GroebnerBasis::from_reduced(order.clone(), basis, source.clone(), ring.nvars());
        if gb.verify(SPOT_CHECK_PAIRS) {
            (Some(gb), Lookup::Hit)
        } else {
            (None, Lookup::Rejected)
        }
    }

    pub fn store(
        &self,
        key: &SchemeKey,
        order: &TermOrder,
        gb: &Basis,
        ring: &Ring,
    ) -> io::Result<()> {
        let mut text = Self::header(key, order);
        text.push('\n');
        text.push_str(&gb.to_text(|p| ring.render(p)));
        let path = self.path(key, order);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)
    }
}
