import type { FacetsResponse, Mode } from './api.js'
import type { UiState } from './state.js'

export function renderFacetPanel(
  el: HTMLElement,
  facets: FacetsResponse | null,
  state: UiState,
  onToggle: (kind: Mode, id: string) => void,
): void {
  el.innerHTML = ''
  if (facets === null) {
    const empty = document.createElement('div')
    empty.className = 'empty-state'
    empty.textContent = 'Loading facets...'
    el.appendChild(empty)
    return
  }

  const concepts = document.createElement('section')
  concepts.className = 'facet-concepts'
  const conceptsTitle = document.createElement('h2')
  conceptsTitle.textContent = 'Concepts'
  concepts.appendChild(conceptsTitle)
  const conceptList = document.createElement('ul')
  for (const concept of facets.concepts) {
    const li = document.createElement('li')
    const label = document.createElement('label')
    const box = document.createElement('input')
    box.type = 'checkbox'
    box.dataset.id = concept.classIri
    box.checked = state.mode === 'concept' && state.selectedSeeds.has(concept.classIri)
    box.addEventListener('change', () => onToggle('concept', concept.classIri))
    label.appendChild(box)
    const caption = document.createElement('span')
    caption.className = 'facet-label'
    caption.textContent = concept.label
    label.appendChild(caption)
    const count = document.createElement('span')
    count.className = 'facet-count'
    count.textContent = String(concept.count)
    label.appendChild(count)
    li.appendChild(label)
    conceptList.appendChild(li)
  }
  concepts.appendChild(conceptList)
  el.appendChild(concepts)

  const individuals = document.createElement('section')
  individuals.className = 'facet-individuals'
  const individualsTitle = document.createElement('h2')
  individualsTitle.textContent = 'Individuals'
  individuals.appendChild(individualsTitle)
  const individualList = document.createElement('ul')
  for (const ind of facets.individuals) {
    const li = document.createElement('li')
    li.className = 'facet-item'
    li.dataset.id = ind.id
    if (state.mode === 'individual' && state.selectedSeeds.has(ind.id)) {
      li.classList.add('selected')
    }
    const caption = document.createElement('span')
    caption.className = 'facet-label'
    caption.textContent = ind.label
    li.appendChild(caption)
    li.addEventListener('click', () => onToggle('individual', ind.id))
    individualList.appendChild(li)
  }
  individuals.appendChild(individualList)
  el.appendChild(individuals)
}
