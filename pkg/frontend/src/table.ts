import type { TableRow } from './api.js'

export type Column = 'subject' | 'predicate' | 'object'

export interface TableSort {
  by: Column
  ascending: boolean
}

const COLUMNS: { key: Column; caption: string }[] = [
  { key: 'subject', caption: 'Subject' },
  { key: 'predicate', caption: 'Predicate' },
  { key: 'object', caption: 'Object' },
]

export function sortRows(rows: TableRow[], sort: TableSort): TableRow[] {
  const dir = sort.ascending ? 1 : -1
  return [...rows].sort((a, b) => dir * a[sort.by].localeCompare(b[sort.by]))
}

export function renderTablePane(
  el: HTMLElement,
  rows: TableRow[] | null,
  sort: TableSort,
  onSort: (column: Column) => void,
): void {
  el.innerHTML = ''
  if (rows === null || rows.length === 0) {
    const empty = document.createElement('div')
    empty.className = 'empty-state'
    empty.textContent = rows === null ? 'No view loaded yet.' : 'The current view is empty.'
    el.appendChild(empty)
    return
  }

  const table = document.createElement('table')
  table.className = 'triples'
  const thead = document.createElement('thead')
  const headRow = document.createElement('tr')
  for (const col of COLUMNS) {
    const th = document.createElement('th')
    th.dataset.column = col.key
    th.textContent = col.caption
    if (col.key === sort.by) th.dataset.sorted = sort.ascending ? 'asc' : 'desc'
    th.addEventListener('click', () => onSort(col.key))
    headRow.appendChild(th)
  }
  thead.appendChild(headRow)
  table.appendChild(thead)

  const tbody = document.createElement('tbody')
  for (const row of sortRows(rows, sort)) {
    const tr = document.createElement('tr')
    for (const col of COLUMNS) {
      const td = document.createElement('td')
      td.textContent = row[col.key]
      tr.appendChild(td)
    }
    tbody.appendChild(tr)
  }
  table.appendChild(tbody)
  el.appendChild(table)
}
