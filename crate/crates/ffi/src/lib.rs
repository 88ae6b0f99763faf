//! C ABI over the `metafsm` generator.
//!
//! Machines are opaque handles created by `metafsm_generate` or
//! `metafsm_from_json` and released with `metafsm_machine_free`. Strings
//! returned through out-parameters are owned by the caller and released with
//! `metafsm_string_free`. Every entry point returns a [`MetafsmStatus`]; on
//! failure `metafsm_last_error` describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use metafsm::fsm::{self, FsmError};
use metafsm::render::{render, Format, RenderOptions};
use metafsm::StateMachine;

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetafsmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Generation = 4,
    Parse = 5,
    Validation = 6,
    Render = 7,
    UnknownState = 8,
    UnknownMessage = 9,
    Finished = 10,
    Panic = 11,
}

/// Output format for `metafsm_render`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetafsmFormat {
    Text = 0,
    Dot = 1,
    Source = 2,
}

/// A generated machine together with a cursor used by `metafsm_step`.
pub struct MetafsmMachine {
    machine: StateMachine,
    current: CString,
}

impl MetafsmMachine {
    fn new(machine: StateMachine) -> Self {
        let current = CString::new(machine.start_state()).expect("state names contain no NUL");
        Self { machine, current }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Outcome = Result<(), (MetafsmStatus, String)>;

fn guard(body: impl FnOnce() -> Outcome) -> MetafsmStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MetafsmStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MetafsmStatus::Panic
        }
    }
}

fn null(what: &str) -> (MetafsmStatus, String) {
    (MetafsmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn input_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (MetafsmStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (MetafsmStatus::InvalidUtf8, format!("{what} is not UTF-8: {e}")))
}

unsafe fn machine_ref<'a>(m: *const MetafsmMachine) -> Result<&'a MetafsmMachine, (MetafsmStatus, String)> {
    m.as_ref().ok_or_else(|| null("machine"))
}

fn into_c_string(s: String) -> Result<*mut c_char, (MetafsmStatus, String)> {
    CString::new(s).map(CString::into_raw).map_err(|_| (MetafsmStatus::InvalidArgument, "output contains NUL".into()))
}

unsafe fn publish_machine(out: *mut *mut MetafsmMachine, machine: StateMachine) -> Outcome {
    *out = Box::into_raw(Box::new(MetafsmMachine::new(machine)));
    Ok(())
}

/// Generates the minimized commit machine for replication factor `r`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn metafsm_generate(r: u32, out: *mut *mut MetafsmMachine) -> MetafsmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let machine = metafsm::bft::generate(r).map_err(|e| {
            let status = match e {
                metafsm::bft::BftError::Parameters(_) => MetafsmStatus::InvalidArgument,
                metafsm::bft::BftError::Generation(_) => MetafsmStatus::Generation,
            };
            (status, e.to_string())
        })?;
        publish_machine(out, machine)
    })
}

/// Parses and validates a machine document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn metafsm_from_json(json: *const c_char, out: *mut *mut MetafsmMachine) -> MetafsmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let text = input_str(json, "json")?;
        let machine = fsm::deserialize(text).map_err(|e| (MetafsmStatus::Parse, e.to_string()))?;
        let diagnostics = fsm::validate(&machine);
        if let Some(first) = diagnostics.first() {
            return Err((MetafsmStatus::Validation, format!("{first} ({} diagnostics)", diagnostics.len())));
        }
        publish_machine(out, machine)
    })
}

/// Serializes a machine as a JSON document.
///
/// # Safety
/// `machine` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn metafsm_to_json(machine: *const MetafsmMachine, out: *mut *mut c_char) -> MetafsmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let m = machine_ref(machine)?;
        *out = into_c_string(fsm::serialize(&m.machine))?;
        Ok(())
    })
}

/// Renders a machine. `module_name` applies to source output and may be null
/// for the default.
///
/// # Safety
/// `machine` must be a live handle, `module_name` null or NUL-terminated, and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn metafsm_render(
    machine: *const MetafsmMachine,
    format: MetafsmFormat,
    module_name: *const c_char,
    out: *mut *mut c_char,
) -> MetafsmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let m = machine_ref(machine)?;
        let mut options = RenderOptions {
            format: match format {
                MetafsmFormat::Text => Format::Text,
                MetafsmFormat::Dot => Format::Dot,
                MetafsmFormat::Source => Format::Source,
            },
            ..RenderOptions::default()
        };
        if !module_name.is_null() {
            options.source_module_name = input_str(module_name, "module_name")?.to_string();
        }
        let text = render(&m.machine, &options).map_err(|e| (MetafsmStatus::Render, e.to_string()))?;
        *out = into_c_string(text)?;
        Ok(())
    })
}

/// Number of states including the finish state; 0 for a null handle.
///
/// # Safety
/// `machine` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn metafsm_state_count(machine: *const MetafsmMachine) -> usize {
    machine.as_ref().map_or(0, |m| m.machine.state_count())
}

/// Current state name of the cursor. The pointer stays valid until the next
/// `metafsm_step`, `metafsm_reset` or `metafsm_machine_free` on this handle.
/// Returns null for a null handle.
///
/// # Safety
/// `machine` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn metafsm_current_state(machine: *const MetafsmMachine) -> *const c_char {
    machine.as_ref().map_or(ptr::null(), |m| m.current.as_ptr())
}

/// Moves the cursor back to the start state.
///
/// # Safety
/// `machine` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn metafsm_reset(machine: *mut MetafsmMachine) -> MetafsmStatus {
    guard(|| {
        let m = machine.as_mut().ok_or_else(|| null("machine"))?;
        m.current = CString::new(m.machine.start_state()).expect("state names contain no NUL");
        Ok(())
    })
}

/// Delivers `message` to the cursor. On success `actions_out` receives the
/// emitted actions joined by commas (empty when there are none).
///
/// # Safety
/// `machine` must be a live handle, `message` NUL-terminated, and
/// `actions_out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn metafsm_step(
    machine: *mut MetafsmMachine,
    message: *const c_char,
    actions_out: *mut *mut c_char,
) -> MetafsmStatus {
    guard(|| {
        if !actions_out.is_null() {
            *actions_out = ptr::null_mut();
        }
        let m = machine.as_mut().ok_or_else(|| null("machine"))?;
        let message = input_str(message, "message")?;
        let current = m.current.to_str().expect("state names are UTF-8");
        let (actions, next) = fsm::step(&m.machine, current, message).map_err(|e| {
            let status = match e {
                FsmError::UnknownMessage(_) => MetafsmStatus::UnknownMessage,
                FsmError::TerminalState(_) => MetafsmStatus::Finished,
                _ => MetafsmStatus::UnknownState,
            };
            (status, e.to_string())
        })?;
        let joined = actions.join(",");
        let next = CString::new(next).expect("state names contain no NUL");
        if !actions_out.is_null() {
            *actions_out = into_c_string(joined)?;
        }
        m.current = next;
        Ok(())
    })
}

/// Whether the cursor is at the finish state; false for a null handle.
///
/// # Safety
/// `machine` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn metafsm_is_finished(machine: *const MetafsmMachine) -> bool {
    machine.as_ref().is_some_and(|m| m.current.to_bytes() == m.machine.finish_state().as_bytes())
}

/// Releases a machine handle. Null is ignored.
///
/// # Safety
/// `machine` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn metafsm_machine_free(machine: *mut MetafsmMachine) {
    if !machine.is_null() {
        drop(Box::from_raw(machine));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn metafsm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn metafsm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
