//! Bundled configurations and reference tables.

use serde::Deserialize;

use crate::cover::CoverConfig;
use crate::error::{Error, Result};

pub const KULIKOV: &str = include_str!("../data/kulikov.json");
pub const KULIKOV_QUADRANGLE: &str = include_str!("../data/kulikov_quadrangle.json");
pub const MAXIMAL_COVER: &str = include_str!("../data/maximal_cover.json");
pub const TABLE_TANGENT: &str = include_str!("../data/table_tangent.json");
pub const TABLE_BICANONICAL: &str = include_str!("../data/table_bicanonical.json");

pub fn kulikov() -> CoverConfig {
    CoverConfig::from_json(KULIKOV).expect("bundled config")
}

pub fn kulikov_quadrangle() -> CoverConfig {
    CoverConfig::from_json(KULIKOV_QUADRANGLE).expect("bundled config")
}

pub fn maximal_cover() -> CoverConfig {
    CoverConfig::from_json(MAXIMAL_COVER).expect("bundled config")
}

/// Looks up a bundled config by name, for use where a path is expected.
pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "kulikov" => Some(KULIKOV),
        "kulikov_quadrangle" => Some(KULIKOV_QUADRANGLE),
        "maximal_cover" => Some(MAXIMAL_COVER),
        _ => None,
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct TangentFixtureRow {
    pub character: Vec<i64>,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    pub delta_set: Vec<String>,
    pub h2: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TangentFixture {
    pub config: String,
    pub rows: Vec<TangentFixtureRow>,
    pub chi_log_sum: i64,
    pub h1_tangent: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct BicanonicalFixtureRow {
    pub character: Vec<i64>,
    pub delta_sum: Vec<i64>,
    #[serde(rename = "L_inverse")]
    pub l_inverse: Vec<i64>,
    pub class: Vec<i64>,
    pub h0: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct BicanonicalFixture {
    pub config: String,
    pub rows: Vec<BicanonicalFixtureRow>,
    pub characters_with_sections: Vec<Vec<i64>>,
    pub generates: bool,
    pub h0_total: u64,
}

pub fn tangent_fixture() -> TangentFixture {
    parse(TABLE_TANGENT).expect("bundled fixture")
}

pub fn bicanonical_fixture() -> BicanonicalFixture {
    parse(TABLE_BICANONICAL).expect("bundled fixture")
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
}
