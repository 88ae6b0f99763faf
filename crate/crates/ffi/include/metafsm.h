#ifndef METAFSM_H
#define METAFSM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Output format for `metafsm_render`.
 */
typedef enum MetafsmFormat {
  METAFSM_FORMAT_TEXT = 0,
  METAFSM_FORMAT_DOT = 1,
  METAFSM_FORMAT_SOURCE = 2,
} MetafsmFormat;

/**
 * Result code of every fallible entry point.
 */
typedef enum MetafsmStatus {
  METAFSM_STATUS_OK = 0,
  METAFSM_STATUS_NULL_POINTER = 1,
  METAFSM_STATUS_INVALID_UTF8 = 2,
  METAFSM_STATUS_INVALID_ARGUMENT = 3,
  METAFSM_STATUS_GENERATION = 4,
  METAFSM_STATUS_PARSE = 5,
  METAFSM_STATUS_VALIDATION = 6,
  METAFSM_STATUS_RENDER = 7,
  METAFSM_STATUS_UNKNOWN_STATE = 8,
  METAFSM_STATUS_UNKNOWN_MESSAGE = 9,
  METAFSM_STATUS_FINISHED = 10,
  METAFSM_STATUS_PANIC = 11,
} MetafsmStatus;

/**
 * A generated machine together with a cursor used by `metafsm_step`.
 */
typedef struct MetafsmMachine MetafsmMachine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Generates the minimized commit machine for replication factor `r`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum MetafsmStatus metafsm_generate(uint32_t r, struct MetafsmMachine **out);

/**
 * Parses and validates a machine document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` valid for writes.
 */
enum MetafsmStatus metafsm_from_json(const char *json, struct MetafsmMachine **out);

/**
 * Serializes a machine as a JSON document.
 *
 * # Safety
 * `machine` must be a live handle and `out` valid for writes.
 */
enum MetafsmStatus metafsm_to_json(const struct MetafsmMachine *machine, char **out);

/**
 * Renders a machine. `module_name` applies to source output and may be null
 * for the default.
 *
 * # Safety
 * `machine` must be a live handle, `module_name` null or NUL-terminated, and
 * `out` valid for writes.
 */
enum MetafsmStatus metafsm_render(const struct MetafsmMachine *machine,
                                  enum MetafsmFormat format,
                                  const char *module_name,
                                  char **out);

/**
 * Number of states including the finish state; 0 for a null handle.
 *
 * # Safety
 * `machine` must be null or a live handle.
 */
size_t metafsm_state_count(const struct MetafsmMachine *machine);

/**
 * Current state name of the cursor. The pointer stays valid until the next
 * `metafsm_step`, `metafsm_reset` or `metafsm_machine_free` on this handle.
 * Returns null for a null handle.
 *
 * # Safety
 * `machine` must be null or a live handle.
 */
const char *metafsm_current_state(const struct MetafsmMachine *machine);

/**
 * Moves the cursor back to the start state.
 *
 * # Safety
 * `machine` must be a live handle.
 */
enum MetafsmStatus metafsm_reset(struct MetafsmMachine *machine);

/**
 * Delivers `message` to the cursor. On success `actions_out` receives the
 * emitted actions joined by commas (empty when there are none).
 *
 * # Safety
 * `machine` must be a live handle, `message` NUL-terminated, and
 * `actions_out` null or valid for writes.
 */
enum MetafsmStatus metafsm_step(struct MetafsmMachine *machine,
                                const char *message,
                                char **actions_out);

/**
 * Whether the cursor is at the finish state; false for a null handle.
 *
 * # Safety
 * `machine` must be null or a live handle.
 */
bool metafsm_is_finished(const struct MetafsmMachine *machine);

/**
 * Releases a machine handle. Null is ignored.
 *
 * # Safety
 * `machine` must be null or a handle not yet freed.
 */
void metafsm_machine_free(struct MetafsmMachine *machine);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void metafsm_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *metafsm_last_error(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* METAFSM_H */
