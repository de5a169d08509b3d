use std::fmt;
use std::str::FromStr;

use super::{build_bk, build_cyclic, HopfAlgebra, HopfError};

/// Built-in catalog entries: `cyclic:n`, `bk:k`, `cplus:k`, `cminus:k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogKey {
    Cyclic(usize),
    Bk(usize),
    CPlus(usize),
    CMinus(usize),
}

impl CatalogKey {
    /// The Hopf algebra named by the key; for `cplus`/`cminus` this is `B_k`,
    /// the algebra whose double carries the module.
    pub fn hopf(&self) -> HopfAlgebra {
        match *self {
            CatalogKey::Cyclic(n) => build_cyclic(n),
            CatalogKey::Bk(k) | CatalogKey::CPlus(k) | CatalogKey::CMinus(k) => build_bk(k),
        }
    }

    pub fn is_module(&self) -> bool {
        matches!(self, CatalogKey::CPlus(_) | CatalogKey::CMinus(_))
    }
}

impl FromStr for CatalogKey {
    type Err = HopfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HopfError::BadKey(s.to_string());
        let (family, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = arg.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match family.trim() {
            "cyclic" => Ok(CatalogKey::Cyclic(n)),
            "bk" => Ok(CatalogKey::Bk(n)),
            "cplus" => Ok(CatalogKey::CPlus(n)),
            "cminus" => Ok(CatalogKey::CMinus(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKey::Cyclic(n) => write!(f, "cyclic:{n}"),
            CatalogKey::Bk(k) => write!(f, "bk:{k}"),
            CatalogKey::CPlus(k) => write!(f, "cplus:{k}"),
            CatalogKey::CMinus(k) => write!(f, "cminus:{k}"),
        }
    }
}
