/* tslint:disable */
/* eslint-disable */

/**
 * `[re, im, |J|, v_r, ref_vol]` for `J_{K,n}` at `exp(2 pi i/(r+1/2))`;
 * `v_r` is the volume-sequence term of the same knot at level `r`.
 */
export function colored_jones(knot: string, n: number, r: number): Float64Array;

/**
 * Hyperbolic volume of the figure-eight complement.
 */
export function figure_eight_reference(): number;

/**
 * `|Phi_l(p, q)|` on a `size x size` grid over `[0,1)^2`, rows indexed by `q`.
 */
export function theta_field(r: number, tau_re: number, tau_im: number, l: number, size: number): Float64Array;

/**
 * Integer matrix `[a, b, c, d]` of a word in `S`, `T`.
 */
export function word_matrix(word: string): Int32Array;

/**
 * Quantum representation of the word at level `r`, row-major `(re, im)` pairs.
 */
export function word_representation(word: string, r: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly colored_jones: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly figure_eight_reference: () => number;
    readonly theta_field: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly word_matrix: (a: number, b: number) => [number, number, number, number];
    readonly word_representation: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
