/**
 * Circuit <-> page URL synchronization.
 *
 * The canonical circuit text lives in the `circuit` query parameter, so
 * circuits can be bookmarked and shared, and the browser Back button acts as
 * undo (every settled edit pushes a history entry).
 */

export const CIRCUIT_PARAM = "circuit";

/** Extract the circuit text from a query string ("?a=b&circuit=..." or "a=b"). */
export function circuitFromQuery(search: string): string | null {
  const params = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  return params.get(CIRCUIT_PARAM);
}

/** Query string carrying the circuit, preserving unrelated parameters. */
export function queryWithCircuit(search: string, circuitText: string): string {
  const params = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  params.set(CIRCUIT_PARAM, circuitText);
  return "?" + params.toString();
}

export function readCircuitFromLocation(): string | null {
  return circuitFromQuery(window.location.search);
}

/** Push (edit) or replace (initial load normalization) the history entry. */
export function writeCircuitToLocation(circuitText: string, push: boolean): void {
  const query = queryWithCircuit(window.location.search, circuitText);
  const url = window.location.pathname + query;
  if (push) {
    window.history.pushState({ circuit: circuitText }, "", url);
  } else {
    window.history.replaceState({ circuit: circuitText }, "", url);
  }
}
