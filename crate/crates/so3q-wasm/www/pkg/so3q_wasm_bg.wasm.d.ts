/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const colored_jones: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const figure_eight_reference: () => number;
export const theta_field: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const word_matrix: (a: number, b: number) => [number, number, number, number];
export const word_representation: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
