// placeholder: app-layer tests land with the config/report/runner modules
