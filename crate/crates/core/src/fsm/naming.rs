use super::{ComponentKind, ComponentSpec, FsmError, StateVector, Value, FINISH};

/// Checks that `vector` assigns one in-domain value to every component.
pub fn check_vector(vector: &StateVector, components: &[ComponentSpec]) -> Result<(), FsmError> {
    if vector.len() != components.len() {
        return Err(FsmError::Arity { expected: components.len(), found: vector.len() });
    }
    for (value, spec) in vector.values().iter().zip(components) {
        if !spec.admits(*value) {
            return Err(FsmError::Domain { component: spec.name.clone(), value: value.to_string() });
        }
    }
    Ok(())
}

/// Canonical name of a state vector: values in declaration order, booleans
/// as `T`/`F`, integers in decimal, separated by `/`.
pub fn state_name(vector: &StateVector, components: &[ComponentSpec]) -> Result<String, FsmError> {
    check_vector(vector, components)?;
    let mut name = String::with_capacity(vector.len() * 2);
    for (i, value) in vector.values().iter().enumerate() {
        if i > 0 {
            name.push('/');
        }
        match value {
            Value::Bool(true) => name.push('T'),
            Value::Bool(false) => name.push('F'),
            Value::Int(v) => name.push_str(&v.to_string()),
        }
    }
    Ok(name)
}

/// Inverse of [`state_name`]. The reserved finish name is rejected.
pub fn parse_state_name(name: &str, components: &[ComponentSpec]) -> Result<StateVector, FsmError> {
    let malformed = || FsmError::MalformedName(name.to_string());
    if name == FINISH {
        return Err(malformed());
    }
    let parts: Vec<&str> = name.split('/').collect();
    if parts.len() != components.len() {
        return Err(malformed());
    }
    let mut values = Vec::with_capacity(parts.len());
    for (part, spec) in parts.iter().zip(components) {
        let value = match spec.kind {
            ComponentKind::Boolean => match *part {
                "T" => Value::Bool(true),
                "F" => Value::Bool(false),
                _ => return Err(malformed()),
            },
            ComponentKind::BoundedInteger { .. } => {
                // Reject signs and leading zeros so the encoding stays bijective.
                if part.is_empty()
                    || !part.bytes().all(|b| b.is_ascii_digit())
                    || (part.len() > 1 && part.starts_with('0'))
                {
                    return Err(malformed());
                }
                Value::Int(part.parse().map_err(|_| malformed())?)
            }
        };
        values.push(value);
    }
    let vector = StateVector(values);
    check_vector(&vector, components)?;
    Ok(vector)
}
