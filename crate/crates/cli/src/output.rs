use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::OutputFormat;

/// Integers as JSON numbers when they fit in an `i64`, strings otherwise.
pub fn integer_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn render<T: Serialize + ToString>(format: OutputFormat, value: &T) -> String {
    match format {
        OutputFormat::Text => value.to_string(),
        OutputFormat::Json => to_json(value),
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}
