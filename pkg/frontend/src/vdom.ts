/**
 * A minimal virtual-node layer so view builders stay pure and testable in
 * Node; main.ts materializes the tree into real elements.
 */

export type Child = VNode | string;

export interface VNode {
  tag: string;
  props: Record<string, string | number>;
  children: Child[];
}

export function h(
  tag: string,
  props: Record<string, string | number> = {},
  ...children: (Child | Child[] | null | undefined)[]
): VNode {
  const flat: Child[] = [];
  for (const child of children) {
    if (child === null || child === undefined) continue;
    if (Array.isArray(child)) flat.push(...child);
    else flat.push(child);
  }
  return { tag, props, children: flat };
}

export function findAll(root: VNode, predicate: (node: VNode) => boolean): VNode[] {
  const out: VNode[] = [];
  const walk = (node: VNode) => {
    if (predicate(node)) out.push(node);
    for (const child of node.children) {
      if (typeof child !== "string") walk(child);
    }
  };
  walk(root);
  return out;
}

export function hasClass(node: VNode, name: string): boolean {
  const cls = node.props.class;
  return typeof cls === "string" && cls.split(/\s+/).includes(name);
}

export function textContent(node: VNode): string {
  return node.children
    .map((c) => (typeof c === "string" ? c : textContent(c)))
    .join("");
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function toDom(node: VNode, doc: Document, inSvg = false): Element {
  const svg = inSvg || node.tag === "svg";
  const el = svg
    ? doc.createElementNS(SVG_NS, node.tag)
    : doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.props)) {
    el.setAttribute(key, String(value));
  }
  for (const child of node.children) {
    if (typeof child === "string") el.appendChild(doc.createTextNode(child));
    else el.appendChild(toDom(child, doc, svg));
  }
  return el;
}
