import type { ViewNode } from './api.js'

export interface TooltipHandle {
  element: HTMLDivElement
  show: (node: ViewNode, x: number, y: number) => void
  hide: () => void
}

/** One floating tooltip per app: title line plus one row per datatype assertion. */
export function createTooltip(host: HTMLElement): TooltipHandle {
  const el = document.createElement('div')
  el.className = 'tooltip'
  el.hidden = true
  host.appendChild(el)

  return {
    element: el,
    show(node, x, y) {
      el.innerHTML = ''
      const title = document.createElement('div')
      title.className = 'tooltip-title'
      title.textContent = node.classLabel === null ? node.label : `${node.label} (${node.classLabel})`
      el.appendChild(title)
      for (const row of node.tooltip) {
        const div = document.createElement('div')
        div.className = 'tooltip-row'
        div.textContent = `${row.property}: ${row.value}`
        el.appendChild(div)
      }
      el.style.left = `${x + 14}px`
      el.style.top = `${y + 14}px`
      el.hidden = false
    },
    hide() {
      el.hidden = true
    },
  }
}
