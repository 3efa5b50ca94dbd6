import type { ViewNode, ViewResponse } from './api.js'

const SVG_NS = 'http://www.w3.org/2000/svg'
const WIDTH = 900
const HEIGHT = 620

export interface GraphCallbacks {
  onHover: (node: ViewNode | null, x: number, y: number) => void
  onSelect: (node: ViewNode) => void
}

interface Point {
  x: number
  y: number
}

function circleLayout(ids: string[]): Map<string, Point> {
  const cx = WIDTH / 2
  const cy = HEIGHT / 2
  const pos = new Map<string, Point>()
  if (ids.length === 1) {
    pos.set(ids[0], { x: cx, y: cy })
    return pos
  }
  const r = Math.min(cx, cy) - 90
  ids.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / ids.length - Math.PI / 2
    pos.set(id, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) })
  })
  return pos
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag)
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v)
  return el
}

/**
 * Client-side rendering used when the server has no renderer binary:
 * nodes on a circle, straight labeled edges. Positions are presentation
 * only; nodes and edges come verbatim from the server view.
 */
export function renderGraph(el: HTMLElement, view: ViewResponse, cb: GraphCallbacks): void {
  el.innerHTML = ''
  const svg = svgEl('svg', { viewBox: `0 0 ${WIDTH} ${HEIGHT}`, class: 'graph-canvas' })

  const defs = svgEl('defs', {})
  const marker = svgEl('marker', {
    id: 'arrow',
    viewBox: '0 0 10 10',
    refX: '9',
    refY: '5',
    markerWidth: '7',
    markerHeight: '7',
    orient: 'auto-start-reverse',
  })
  marker.appendChild(svgEl('path', { d: 'M 0 0 L 10 5 L 0 10 z', class: 'edge-arrow' }))
  defs.appendChild(marker)
  svg.appendChild(defs)

  const pos = circleLayout(view.nodes.map(n => n.id))

  for (const edge of view.edges) {
    const a = pos.get(edge.source)
    const b = pos.get(edge.target)
    if (!a || !b) continue
    const group = svgEl('g', { class: 'edge' })
    group.appendChild(
      svgEl('line', {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        'marker-end': 'url(#arrow)',
      }),
    )
    const label = svgEl('text', {
      x: String((a.x + b.x) / 2),
      y: String((a.y + b.y) / 2 - 6),
      class: 'edge-label',
      'text-anchor': 'middle',
    })
    label.textContent = edge.label
    group.appendChild(label)
    svg.appendChild(group)
  }

  for (const node of view.nodes) {
    const p = pos.get(node.id)!
    const group = svgEl('g', { class: 'node' })
    group.setAttribute('data-node-id', node.id)
    group.appendChild(svgEl('ellipse', { cx: String(p.x), cy: String(p.y), rx: '52', ry: '26' }))
    const label = svgEl('text', {
      x: String(p.x),
      y: String(p.y),
      class: 'node-label',
      'text-anchor': 'middle',
    })
    label.textContent = node.label
    group.appendChild(label)
    if (node.classLabel !== null) {
      const caption = svgEl('text', {
        x: String(p.x),
        y: String(p.y + 14),
        class: 'node-class',
        'text-anchor': 'middle',
      })
      caption.textContent = `(${node.classLabel})`
      group.appendChild(caption)
    }
    group.addEventListener('mouseenter', () => cb.onHover(node, p.x, p.y))
    group.addEventListener('mouseleave', () => cb.onHover(null, 0, 0))
    group.addEventListener('click', () => cb.onSelect(node))
    svg.appendChild(group)
  }

  el.appendChild(svg)
}

/**
 * Server-rendered SVG backdrop. Hover wiring relies on GraphViz putting
 * the node id in each node group's <title>; if that shape is absent the
 * caller keeps the client rendering instead.
 */
export function attachServerSvg(
  el: HTMLElement,
  svgText: string,
  view: ViewResponse,
  cb: GraphCallbacks,
): boolean {
  const holder = document.createElement('div')
  holder.className = 'server-svg'
  holder.innerHTML = svgText
  const byId = new Map(view.nodes.map(n => [n.id, n]))
  let wired = 0
  holder.querySelectorAll('g.node').forEach(group => {
    const id = group.querySelector('title')?.textContent ?? ''
    const node = byId.get(id)
    if (!node) return
    group.setAttribute('data-node-id', id)
    group.addEventListener('mouseenter', (ev: Event) => {
      const mouse = ev as MouseEvent
      cb.onHover(node, mouse.clientX, mouse.clientY)
    })
    group.addEventListener('mouseleave', () => cb.onHover(null, 0, 0))
    group.addEventListener('click', () => cb.onSelect(node))
    wired += 1
  })
  if (wired === 0) return false
  el.innerHTML = ''
  el.appendChild(holder)
  return true
}

export function markHoveredNode(el: HTMLElement, nodeId: string | null): void {
  el.querySelectorAll('[data-node-id]').forEach(group => {
    group.classList.toggle(
      'hovered',
      nodeId !== null && group.getAttribute('data-node-id') === nodeId,
    )
  })
}
